mod classic;
pub(crate) mod conj;
mod lie2;
mod meta;
mod pleth;
mod primes;
mod subset;
mod tables;

use super::{CheckDef, CheckFn, CheckKind};

pub use conj::lift_exceptions;
pub use tables::table_values;
pub use meta::permutation_counts;

const fn identity(name: &'static str, anchor: &'static str, min_degree: usize, run: CheckFn) -> CheckDef {
    CheckDef {
        name,
        anchor,
        kind: CheckKind::Identity,
        min_degree,
        default_n: 10,
        ceiling: 14,
        options: &[],
        run,
    }
}

const fn with_options(mut d: CheckDef, options: &'static [&'static str]) -> CheckDef {
    d.options = options;
    d
}

const fn with_degrees(mut d: CheckDef, default_n: usize, ceiling: usize) -> CheckDef {
    d.default_n = default_n;
    d.ceiling = ceiling;
    d
}

const fn table(name: &'static str, anchor: &'static str, n: usize, run: CheckFn) -> CheckDef {
    CheckDef {
        name,
        anchor,
        kind: CheckKind::Table,
        min_degree: n,
        default_n: n,
        ceiling: n,
        options: &[],
        run,
    }
}

const fn conjecture(name: &'static str, anchor: &'static str, min_degree: usize, ceiling: usize, options: &'static [&'static str], run: CheckFn) -> CheckDef {
    CheckDef {
        name,
        anchor,
        kind: CheckKind::Conjecture,
        min_degree,
        default_n: 16,
        ceiling,
        options,
        run,
    }
}

pub(crate) static REGISTRY: &[CheckDef] = &[
    with_degrees(identity("compare.symext", "sum_lambda H_lambda[Lie] = p1^n = sum_lambda E_lambda[Lie2]", 1, classic::symext), 10, 14),
    identity("compare.plinvhe", "H[alt Lie] = 1 + p1 = E[alt Lie2]", 1, classic::plinvhe),
    identity("compare.acyceh", "sum (-1)^(n-l) E_lambda[Lie] = 0 = sum (-1)^(n-l) H_lambda[Lie2], n >= 2", 2, classic::acyceh),
    identity("compare.totalcoh", "sum E_lambda[Lie] = 2 e2 p1^(n-2); sum H_lambda[Lie2] = power-of-2 part sum", 2, classic::totalcoh),
    identity("pbw.equiv.sym", "(H-1)[Lie] = sum p1^n", 1, lie2::pbw_sym),
    identity("pbw.equiv.altsym", "(H-1)[alt Lie] = p1", 1, lie2::pbw_altsym),
    identity("pbw.equiv.altext", "sum (-1)^(r-1) e_r[Lie] = p1", 1, lie2::pbw_altext),
    identity("pbw.equiv.altext-ge2", "sum (-1)^(r-1) e_r[Lie>=2] = kappa", 1, lie2::pbw_altext_ge2),
    identity("pbw.equiv.cochain", "sum_j (-1)^(n-j) e_j[Lie>=2]|_n = (-1)^(n-1) s(n-1,1)", 2, lie2::pbw_cochain),
    identity("pbw.equiv.filtration", "Lie>=2 = Lie[kappa] = kappa + kappa[kappa] + ...", 1, lie2::pbw_filtration),
    identity("pbw.equiv.hodge", "(H-1)[Lie>=2] = sum_n sum_k (-1)^k p1^(n-k) e_k", 1, lie2::pbw_hodge),
    identity("lie2.equiv.ext", "(E-1)[Lie2] = sum p1^n", 1, lie2::lie2_ext),
    identity("lie2.equiv.plinv", "sum (-1)^(r-1) h_r[Lie2] = p1", 1, lie2::lie2_plinv),
    identity("lie2.equiv.ext-ge2", "sum (-1)^(r-1) h_r[Lie2>=2] = omega(kappa)", 1, lie2::lie2_ext_ge2),
    identity("lie2.equiv.cochain", "sum_j (-1)^(n-j) h_j[Lie2>=2]|_n = (-1)^(n-1) s(2,1^(n-2))", 2, lie2::lie2_cochain),
    identity("lie2.equiv.filtration", "Lie2>=2 = Lie2[omega(kappa)] = w + w[w] + ...", 1, lie2::lie2_filtration),
    identity("lie2.equiv.hodge", "(E-1)[Lie2>=2] = sum_n sum_k (-1)^k p1^(n-k) h_k", 1, lie2::lie2_hodge_series),
    identity("lie2.hodge", "Delta_n = sum_k e_k[Lie2>=2]|_n = sum_k (-1)^k p1^(n-k) h_k", 2, lie2::lie2_hodge),
    identity("lie2.hodgefilt", "sum_r omega(h_r[Lie>=2]) = sum_r e_r[Lie2>=2]; alternating sums give s(2,1^(n-2))", 2, lie2::lie2_hodgefilt),
    identity("lie2.lehrer", "Vh_odd = Vh_even = half the power-of-2 part sum; Vh(2m+1) = p1 Vh(2m)", 2, lie2::lie2_lehrer),
    identity("lie2.althlie", "alternating sums of h_r[Lie] and e_r[Lie2]", 1, lie2::lie2_althlie),
    identity("lie2.sigma", "H[Lie2>=2]|_n = p1 H[Lie2>=2]|_(n-1) + (-1)^n sigma_n", 2, lie2::lie2_sigma),
    identity("lie2.from-lie", "Lie2 = sum_k Lie[p_(2^k)]; Lie = Lie2 - Lie2[p2]", 1, lie2::lie2_from_lie),
    identity("conjlie.decomp", "sum Conj = sum_k p_k[Lie] = sum_k p_(2k-1)[Lie2], with Moebius inversions", 1, lie2::conjlie_decomp),
    with_options(identity("primes.meta", "H, E and alternating versions of L^S as products over P(S)", 1, primes::meta), &["s"]),
    with_options(identity("primes.lvalues", "values of L^S_n and Foulkes characters at p_i = 1 and p_i = -1", 1, primes::lvalues), &["s"]),
    identity("plinv-e.1", "E[Lie2] = (1-p1)^-1; H^pm[Lie2] = 1 - p1", 1, classic::plinv_e1),
    identity("plinv-e.2", "E[alt Lie2] = 1 + p1", 1, classic::plinv_e2),
    identity("plinv-e.3", "H[Lie2] = prod_k (1-p_(2^k))^-1", 1, classic::plinv_e3),
    identity("plinv-e.4", "H[alt Lie2] = prod_k (1+p_(2^k))", 1, classic::plinv_e4),
    identity("classic.thrall", "H[Lie] = (1-p1)^-1", 1, classic::thrall),
    identity("classic.cadogan", "H[alt Lie] = 1 + p1", 1, classic::cadogan),
    identity("classic.solomon", "H[Conj] = prod_n (1-p_n)^-1", 1, classic::solomon),
    identity("classic.extlieconj", "omega(E[Lie]) = (1+p2)(1-p1)^-1 and three companions", 1, classic::extlieconj),
    with_options(identity("foulkes.k", "sum over parts dividing k of p_lambda = H[sum_m l_m^(k)]", 1, classic::foulkes_k), &["k"]),
    with_options(identity("subsetT.product", "H[F^T] = prod_(n in T) (1-p_n)^-1; F^T = sum_(m in T) Lie[p_m]; E[G^T] = H[F^T]", 1, subset::product), &["t"]),
    with_options(identity("subsetT.conj-inverse", "sum p_m[Lie] = sum Conj and plethystic inverses of Conj and Lie^(q)", 1, subset::conj_inverse), &["k"]),
    with_options(identity("subsetT.recurrence", "f^pow(k)_n = Lie_n + f_(n/k)[p_k]", 1, subset::recurrence), &["k"]),
    with_options(identity("subsetT.pair", "f^{1,k}_n = Lie_n + Lie_(n/k)[p_k], equal to l_n^(k) for prime k", 1, subset::pair), &["k"]),
    with_options(identity("subsetT.pair-ext", "omega(E[F^{1,k}]) = (1-p1)^-1 (1-(-1)^(k-1) p_k)^-1 (1+p2)(1+p_2k)", 1, subset::pair_ext), &["k"]),
    with_options(identity("subsetT.initial", "T = {1..k}: H[F^T] = prod_(n<=k) (1-p_n)^-1", 1, subset::initial), &["k"]),
    with_options(identity("subsetT.divisors", "T = div(k): f^T_n = sum_(m | (k,n)) Lie_(n/m)[p_m] = l_n^(k)", 1, subset::divisor_sets), &["k"]),
    identity("subsetT.regular", "p1^n = sum_k sum_(m | (k,n)) Lie_(n/m)[p_m] = sum_(d | n) d Lie_d[p_(n/d)]", 1, subset::regular),
    with_options(identity("subsetT.one-mod", "T = {n = 1 mod k}: H[F^T] as a product", 1, subset::one_mod), &["k"]),
    identity("subsetT.odd", "sum_(m odd) p_m[Lie] = L^(not 2), Schur-positive", 1, subset::odd),
    with_options(identity("subsetT.conj-lift", "sum Conj = sum_(q not | n) p_n[Lie^(q)]", 1, subset::conj_lift), &["k"]),
    with_options(identity("cor6.10.pos", "T = {1..k}: f^T_n Schur-positive for prime n, n = k, or gpd(n) <= k", 1, subset::cor610), &["k"]),
    with_options(identity("meta.family", "H(v)[F], E(v)[F] and alternating versions as products over f_m(v)", 1, meta::family), &["psi"]),
    with_options(identity("restrict.family", "restriction recurrences for h_j[F], e_j[F] and F>=2", 1, meta::restrict), &["psi"]),
    identity("pleth.compendium", "plethystic inverse pairs and H[F] = E[G] equivalences", 1, pleth::compendium),
    table("tables.table1", "graded pieces of the regular representation of S_4", 4, tables::table1),
    table("tables.table2", "graded pieces of the regular representation of S_5", 5, tables::table2),
    table("tables.table3", "U_k(6) for k = 0..4", 6, tables::table3),
    table("tables.table4", "U_k(7) for k = 0..5", 7, tables::table4),
    with_degrees(conjecture("conj.uk", "U_k(n) Schur-positive, with closed forms for k <= 3", 1, 12, &[], conj::uk), 10, 12),
    conjecture("conj.lie2-lift", "p1 Lie^(q)_(n-1) - Lie^(q)_n Schur-positive off the exceptional degrees", 2, 28, &["q"], conj::lie2_lift),
    conjecture("conj.partialW", "W_i = sum_(r<=i) Lie_(l q^(k-r))[p_(q^r)] Schur-positive", 1, 20, &["q"], conj::partial_w),
    conjecture("conj.powers-of-k", "f^pow(k) and prod_r (1-p_(k^r))^-1 Schur-positive", 1, 20, &["k"], conj::powers_of_k),
    conjecture("conj.stanley", "prod_(n = 1 mod k) (1-p_n)^-1 Schur-positive", 1, 20, &["k"], conj::stanley),
];
