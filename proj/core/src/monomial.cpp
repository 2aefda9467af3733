#include "glab/monomial.hpp"

#include <sstream>

#include "glab/error.hpp"

namespace glab {

MonomialSetup make_monomial(const GroupPtr<Perm>& G, const Subgroup<Perm>& Hsub,
                            int64_t l, std::size_t bound) {
  SemidirectData sdp = semidirect_product(G, Hsub, l, bound);
  Realized<SdpElement> H = realize(sdp.sub);

  std::vector<CycloNum> vals;
  for (int rep : H.grp->class_reps()) {
    const SdpElement& e = H.grp->element(rep);
    vals.push_back(CycloNum::root_of_unity(static_cast<uint64_t>(sdp.l), e.c[0]));
  }
  ClassFunction<SdpElement> chi(H.grp, std::move(vals));

  // chi reads the first kernel coordinate; H fixes the first coset, so this
  // is multiplicative.  Verified on every pair, and against the raw formula.
  for (std::size_t i = 0; i < H.grp->order(); ++i) {
    const SdpElement& e = H.grp->element(static_cast<int>(i));
    if (chi.at_element(static_cast<int>(i)) !=
        CycloNum::root_of_unity(static_cast<uint64_t>(sdp.l), e.c[0]))
      throw error(errc::unsupported, "character is not constant on classes");
  }
  for (std::size_t a = 0; a < H.grp->order(); ++a)
    for (std::size_t b = 0; b < H.grp->order(); ++b) {
      int ab = H.grp->mul(static_cast<int>(a), static_cast<int>(b));
      if (chi.at_element(ab) != chi.at_element(static_cast<int>(a)) *
                                    chi.at_element(static_cast<int>(b)))
        throw error(errc::unsupported, "character is not a homomorphism");
    }

  ClassFunction<SdpElement> ind = induce(H, chi);
  return MonomialSetup{std::move(sdp), std::move(H), std::move(chi), std::move(ind)};
}

std::string RigidityReport::text() const {
  std::ostringstream os;
  os << "classes=" << classes << " chars=" << chars << " matches=" << matches
     << " violations=" << violations << " strict_violations=" << strict_violations;
  return os.str();
}

RigidityReport monomial_rigidity_verify(const MonomialSetup& M) {
  const GroupPtr<SdpElement>& Gt = M.sdp.big;
  RigidityReport rep;
  for (const auto& S : low_index_subgroups(Gt, static_cast<std::size_t>(M.sdp.n))) {
    ++rep.classes;
    Realized<SdpElement> R = realize(S);
    bool sub_conjugate = are_conjugate(S, M.sdp.sub);
    for (const auto& chi2 : abelian_characters(R.grp)) {
      ++rep.chars;
      if (induce(R, chi2) != M.ind_chi) continue;
      ++rep.matches;
      if (!sub_conjugate) {
        ++rep.violations;
        ++rep.strict_violations;
        if (rep.first_violation.empty())
          rep.first_violation = "subgroup class not conjugate to the twisted subgroup";
        continue;
      }
      bool carried = false;
      for (std::size_t g = 0; g < Gt->order() && !carried; ++g) {
        if (conjugate_set(*Gt, S.elems, static_cast<int>(g)) != M.sdp.sub.elems)
          continue;
        if (conjugate_transport(chi2, R, M.H, static_cast<int>(g)) == M.chi)
          carried = true;
      }
      if (!carried) {
        ++rep.strict_violations;
        if (rep.first_violation.empty())
          rep.first_violation = "no conjugation carries the character onto chi";
      }
    }
  }
  return rep;
}

std::string DiagonalReport::text() const {
  std::ostringstream os;
  os << "n=" << n << " l=" << l << "\n";
  for (const auto& row : matrix) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? ", " : " ") << row[j].str();
    os << " ]\n";
  }
  os << "diagonal=" << (diagonal_ok ? "true" : "false") << " trace=" << trace.str()
     << " trace_matches=" << (trace_matches ? "true" : "false")
     << " isolation=" << (isolation_ok ? "true" : "false") << "\n";
  return os.str();
}

DiagonalReport diagonal_evidence(const MonomialSetup& M) {
  const GroupPtr<SdpElement>& Gt = M.sdp.big;
  DiagonalReport rep;
  rep.n = M.sdp.n;
  rep.l = M.sdp.l;
  const CycloNum zeta = CycloNum::root_of_unity(static_cast<uint64_t>(M.sdp.l));
  const CycloNum one = CycloNum::integer(1);

  // Coset representatives gamma_i = (0; g_i) with g_i the base coset reps;
  // gamma_0 is the identity.
  std::vector<int> gamma;
  for (int r : M.sdp.act.reps)
    gamma.push_back(M.sdp.embed[static_cast<std::size_t>(r)]);

  SdpElement alpha_e;
  alpha_e.l = M.sdp.l;
  alpha_e.c.assign(static_cast<std::size_t>(M.sdp.n), 0);
  alpha_e.c[0] = 1;
  alpha_e.g = Perm::identity(M.sdp.base->element(0).degree());
  alpha_e.act = Perm::identity(M.sdp.n);
  const int alpha = Gt->index_of(alpha_e);

  rep.matrix.assign(static_cast<std::size_t>(rep.n),
                    std::vector<CycloNum>(static_cast<std::size_t>(rep.n)));
  rep.diagonal_ok = true;
  CycloNum trace;
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) {
      int x = Gt->mul(Gt->mul(Gt->inv(gamma[static_cast<std::size_t>(i)]), alpha),
                      gamma[static_cast<std::size_t>(j)]);
      CycloNum v;
      if (M.sdp.sub.contains(x)) v = M.chi.at_element(M.H.local_of(x));
      const CycloNum expect = i != j ? CycloNum() : (i == 0 ? zeta : one);
      if (v != expect) rep.diagonal_ok = false;
      if (i == j) trace += v;
      rep.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }
  rep.trace = trace;
  rep.trace_matches = trace == CycloNum::integer(rep.n - 1) + zeta;

  // No multiset of n-2 l-th roots of unity can sum to the trace; enumerate
  // all of them (combinations with repetition).
  rep.isolation_ok = true;
  const int k = rep.n - 2;
  if (k >= 0) {
    std::vector<int> pick;
    uint64_t count = 0;
    auto rec = [&](auto&& self, int remaining, int minroot, const CycloNum& sum) -> void {
      if (remaining == 0) {
        if (++count > 1000000)
          throw error(errc::enumeration_bound_exceeded, "too many root multisets");
        if (sum == rep.trace) rep.isolation_ok = false;
        return;
      }
      for (int r = minroot; r < rep.l; ++r)
        self(self, remaining - 1, r,
             sum + CycloNum::root_of_unity(static_cast<uint64_t>(rep.l), r));
    };
    rec(rec, k, 0, CycloNum());
    rep.multisets_checked = count;
  }
  return rep;
}

}  // namespace glab
