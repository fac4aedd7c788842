#include "gems/enumerator.hpp"

#include <algorithm>
#include <set>

#include "gems/rational.hpp"

namespace gems {

std::vector<int> TypeMultiset::expanded() const {
  std::vector<int> out;
  for (auto [q, k] : entries) out.insert(out.end(), k, q);
  return out;
}

std::vector<std::vector<int>> cyclic_arrangements(
    const std::vector<int>& lengths) {
  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<int>> classes;
  do {
    // normalize to the lexicographically smallest rotation/reflection
    const std::size_t k = sorted.size();
    std::vector<int> best = sorted;
    std::vector<int> rev(sorted.rbegin(), sorted.rend());
    for (const auto& base : {sorted, rev}) {
      for (std::size_t r = 0; r < k; ++r) {
        std::vector<int> rot(base.begin() + r, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + r);
        if (rot < best) best = rot;
      }
    }
    classes.insert(best);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return {classes.begin(), classes.end()};
}

namespace {

TypeMultiset multiset_of(const std::vector<int>& nondecreasing) {
  TypeMultiset ms;
  for (int q : nondecreasing) {
    if (!ms.entries.empty() && ms.entries.back().first == q) {
      ++ms.entries.back().second;
    } else {
      ms.entries.emplace_back(q, 1);
    }
  }
  return ms;
}

}  // namespace

std::vector<CandidateType> enumerate_types(long long chi, bool allow_two_gons) {
  if (chi >= 0) {
    throw Error(ErrorCode::NonNegativeChi,
                "type enumeration is defined for chi < 0 only (chi >= 0 "
                "admits unbounded families); got chi=" +
                    std::to_string(chi));
  }
  const int qmin = allow_two_gons ? 2 : 4;
  // Rewrite the Euler relation as sum k_i/q_i + (-chi)/p = (d-1)/2 with all
  // terms positive. Ranks run up to 4 - 4*chi/p_min with p_min = 4; with
  // 2-gons allowed the same cap keeps the output finite (2-gon slots cancel
  // their own rank contribution, so unbounded ranks would otherwise qualify).
  const long long max_rank = 4 - chi;

  std::vector<CandidateType> out;
  std::vector<int> seq;
  for (long long rank = 3; rank <= max_rank; ++rank) {
    const Rational target(rank - 2, 2);  // (d-1)/2
    seq.clear();

    // nondecreasing face lengths; p solved last from (-chi)/p = remainder
    auto emit = [&](const Rational& rem) {
      Rational p_rat = Rational(-chi) / rem;
      if (!p_rat.is_integer()) return;
      long long p = p_rat.num;
      if (p % 2 != 0) return;
      if (p < seq.back()) return;
      for (int q : seq) {
        if (p % q != 0) return;
      }
      CandidateType cand;
      cand.multiset = multiset_of(seq);
      cand.p = static_cast<int>(p);
      for (auto& arrangement : cyclic_arrangements(seq)) {
        cand.cyclic_expansions.push_back(
            SeType::of(std::move(arrangement), cand.p));
      }
      out.push_back(std::move(cand));
    };

    auto rec = [&](auto&& self, int slots_left, Rational rem, int last_q) -> void {
      if (rem <= Rational(0)) return;  // all remaining terms are positive
      if (slots_left == 0) {
        emit(rem);
        return;
      }
      // each later term is at most 1/q, and (-chi)/p <= (-chi)/q since
      // p >= max q; completability needs q <= (slots_left + (-chi)) / rem
      for (long long q = std::max<long long>(last_q, qmin);
           rem <= Rational(slots_left - chi) / Rational(q); q += 2) {
        seq.push_back(static_cast<int>(q));
        self(self, slots_left - 1, rem - Rational(1, q), static_cast<int>(q));
        seq.pop_back();
      }
    };
    rec(rec, static_cast<int>(rank), target, qmin);
  }

  std::sort(out.begin(), out.end(),
            [](const CandidateType& a, const CandidateType& b) {
              int ra = a.multiset.rank(), rb = b.multiset.rank();
              if (ra != rb) return ra < rb;
              auto ea = a.multiset.expanded(), eb = b.multiset.expanded();
              if (ea != eb) return ea < eb;
              return a.p < b.p;
            });
  return out;
}

bool check_type(const std::vector<int>& cycle, long long p, long long chi) {
  if (p < 2 || p % 2 != 0) return false;
  if (cycle.size() < 3) return false;
  Rational sum(0);
  for (int q : cycle) {
    if (q < 2 || q % 2 != 0) return false;
    if (p % q != 0) return false;
    if (q > p) return false;
    sum = sum + Rational(1, q);
  }
  Rational lhs =
      Rational(1) - Rational(static_cast<long long>(cycle.size()), 2) + sum;
  return lhs == Rational(chi, p);
}

bool check_type(const SeType& type, long long chi) {
  return check_type(type.cycle(), type.p(), chi);
}

std::vector<AdmissibleType> gem_admissible_types(long long chi,
                                                 bool allow_two_gons) {
  auto all = enumerate_types(chi, allow_two_gons);
  std::vector<AdmissibleType> out;
  const bool odd_chi = (chi % 2) != 0;
  for (auto& cand : all) {
    if (cand.multiset.rank() == 3) {
      out.push_back({std::move(cand), Admissibility::Admissible});
    } else if (!odd_chi) {
      // even chi: the surface may be orientable, or non-orientable of even
      // genus, so the higher-rank obstruction does not apply
      out.push_back({std::move(cand), Admissibility::NotExcluded});
    }
    // odd chi: the surface is non-orientable with odd genus 2-chi, which a
    // gem of rank >= 4 cannot embed on; drop the candidate
  }
  return out;
}

}  // namespace gems
