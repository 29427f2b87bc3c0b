//! Buchberger engine over exact rationals.
//!
//! Provides reduced Groebner bases under weighted monomial orders, normal
//! forms, standard-monomial enumeration, colengths, the at-origin local
//! colength via m-adic stabilization, and a torus-saturation test.
//!
//! The engine uses the normal pair-selection strategy (minimal lcm degree
//! first) with the coprimality and chain criteria, and removes rational
//! content from every intermediate polynomial to keep integer sizes down.
//! An optional total-degree truncation implements computation modulo
//! `m^N` for the local colength: dropping a term of degree >= N is exactly
//! reduction by the degree-N monomial generators, which are part of the
//! input basis in that mode.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use num_traits::One;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Exponent, Polynomial};
use crate::rat::Rat;

/// A finite or certified-infinite dimension count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(c) => Some(c),
            Colength::Infinite => None,
        }
    }
}

/// Standard monomials of a quotient, or a certificate that there are
/// infinitely many.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(Vec<Exponent>),
    Infinite,
}

/// An ideal with a lazily computed reduced Groebner basis.
///
/// The basis is computed at most once; concurrent readers observe either
/// "not yet computed" or the final basis.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            nvars: self.nvars,
            order: self.order.clone(),
            gens: self.gens.clone(),
            basis,
        }
    }
}

impl Ideal {
    /// Build an ideal from generators; zero generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if order.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: order.nvars(),
            });
        }
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
        }
        Ok(Ideal {
            nvars,
            order,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// A new ideal with the same order and additional generators.
    pub fn with_extra_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Ideal::new(self.nvars, gens, self.order.clone())
    }

    /// The unique reduced Groebner basis, computed on first use.
    pub fn reduced_basis(&self) -> &[Polynomial] {
        self.basis
            .get_or_init(|| buchberger_engine(&self.gens, &self.order, None))
    }

    /// Remainder of `p` under full division by the reduced basis.
    /// Zero iff `p` lies in the ideal (as polynomial ideals).
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: p.nvars(),
            });
        }
        Ok(reduce_full(
            p.clone(),
            self.reduced_basis(),
            &self.order,
            None,
        ))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit_ideal(&self) -> bool {
        let basis = self.reduced_basis();
        basis.len() == 1 && basis[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.reduced_basis().is_empty()
    }

    /// Equality of ideals via equality of reduced bases (same order), or
    /// mutual membership of generators otherwise.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.order == other.order {
            return Ok(self.reduced_basis() == other.reduced_basis());
        }
        for g in other.reduced_basis() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in self.reduced_basis() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monomials outside the leading-term ideal, in increasing order, or
    /// `Infinite` when for some variable no pure power is a leading term.
    /// `bound`, when given, caps the enumeration.
    pub fn standard_monomials(&self, bound: Option<usize>) -> Result<StandardMonomials> {
        let basis = self.reduced_basis();
        if basis.is_empty() {
            // Zero ideal: the whole ring (infinite unless there are no
            // variables at all).
            return Ok(if self.nvars == 0 {
                StandardMonomials::Finite(vec![Exponent::zero(0)])
            } else {
                StandardMonomials::Infinite
            });
        }
        let lts: Vec<Exponent> = basis
            .iter()
            .map(|g| self.order.leading_term(g).expect("nonzero").0.clone())
            .collect();
        if lts.iter().any(|m| m.is_zero()) {
            // Unit ideal: empty quotient.
            return Ok(StandardMonomials::Finite(Vec::new()));
        }
        // Box bounds: the minimal pure-power leading term per variable.
        let mut limit = vec![0u32; self.nvars];
        for (i, bound) in limit.iter_mut().enumerate() {
            let Some(k) = lts
                .iter()
                .filter(|m| m.pure_power_var() == Some(i))
                .map(|m| m.0[i])
                .min()
            else {
                return Ok(StandardMonomials::Infinite);
            };
            *bound = k;
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        enumerate_box(&mut cur, 0, &limit, &mut |m| {
            if !lts.iter().any(|lt| lt.divides(m)) {
                out.push(m.clone());
            }
        });
        if let Some(cap) = bound {
            if out.len() > cap {
                return Err(Error::EnumerationCapExceeded(cap));
            }
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(StandardMonomials::Finite(out))
    }

    /// Dimension of the full polynomial-ring quotient.
    pub fn colength(&self) -> Result<Colength> {
        Ok(match self.standard_monomials(None)? {
            StandardMonomials::Finite(v) => Colength::Finite(v.len()),
            StandardMonomials::Infinite => Colength::Infinite,
        })
    }

    /// Colength of `I + m^N`, with `m` the maximal ideal at the origin.
    pub fn colength_mod_power(&self, n: u32) -> usize {
        let mut gens: Vec<Polynomial> = self
            .reduced_basis()
            .iter()
            .map(|g| truncate_terms(g.clone(), Some(n)))
            .filter(|g| !g.is_zero())
            .collect();
        gens.extend(degree_monomials(self.nvars, n));
        let basis = buchberger_engine(&gens, &self.order, Some(n));
        let lts: Vec<Exponent> = basis
            .iter()
            .map(|g| self.order.leading_term(g).expect("nonzero").0.clone())
            .collect();
        // Standard monomials all have total degree < n.
        let limit = vec![n; self.nvars];
        let mut count = 0usize;
        let mut cur = vec![0u32; self.nvars];
        enumerate_box(&mut cur, 0, &limit, &mut |m| {
            if m.total_degree() < n && !lts.iter().any(|lt| lt.divides(m)) {
                count += 1;
            }
        });
        count
    }

    /// Dimension of the localized quotient `O_0 / I O_0`, computed as the
    /// stabilized value of `colength(I + m^N)` for increasing `N`.
    ///
    /// Once two consecutive `N` agree the value is exact (Nakayama). A
    /// sequence still strictly growing at the safety bound with
    /// non-decreasing increments certifies positive local dimension and is
    /// reported as `Infinite`; any other non-stabilizing behaviour is a
    /// [`Error::SafetyBoundExceeded`].
    pub fn local_colength_at_origin(&self) -> Result<Colength> {
        let basis = self.reduced_basis();
        if basis.is_empty() {
            return Ok(if self.nvars == 0 {
                Colength::Finite(1)
            } else {
                Colength::Infinite
            });
        }
        if self.is_unit_ideal() {
            return Ok(Colength::Finite(0));
        }
        let start = 1 + match self.colength()? {
            Colength::Finite(c) => c as u32,
            Colength::Infinite => basis
                .iter()
                .map(Polynomial::total_degree)
                .max()
                .unwrap_or(1),
        };
        let bound = 4 * start;
        let mut values = vec![self.colength_mod_power(start)];
        let mut n = start;
        while n < bound {
            n += 1;
            let next = self.colength_mod_power(n);
            let prev = *values.last().expect("nonempty");
            if next == prev {
                return Ok(Colength::Finite(next));
            }
            values.push(next);
        }
        let increments: Vec<usize> = values.windows(2).map(|w| w[1] - w[0]).collect();
        let tail = increments.iter().rev().take(3).collect::<Vec<_>>();
        let growing = tail.len() >= 2
            && tail.iter().all(|&&d| d >= 1)
            && tail.windows(2).all(|w| w[0] >= w[1]);
        if growing {
            Ok(Colength::Infinite)
        } else {
            Err(Error::SafetyBoundExceeded { bound })
        }
    }
}

/// All monomials of total degree exactly `n` as polynomials.
fn degree_monomials(nvars: usize, n: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(cur: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Polynomial>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(Polynomial::monomial(Exponent(cur.clone()), Rat::one()));
            return;
        }
        for a in 0..=left {
            cur[var] = a;
            rec(cur, var + 1, left - a, out);
        }
    }
    if nvars == 0 {
        return out;
    }
    rec(&mut cur, 0, n, &mut out);
    out
}

/// Visit every exponent in the box `0 <= m_i <= limit_i`.
fn enumerate_box(cur: &mut Vec<u32>, var: usize, limit: &[u32], visit: &mut impl FnMut(&Exponent)) {
    if var == limit.len() {
        visit(&Exponent(cur.clone()));
        return;
    }
    for a in 0..=limit[var] {
        cur[var] = a;
        enumerate_box(cur, var + 1, limit, visit);
    }
    cur[var] = 0;
}

fn truncate_terms(p: Polynomial, cut: Option<u32>) -> Polynomial {
    match cut {
        None => p,
        Some(n) => {
            let nvars = p.nvars();
            Polynomial::from_terms(
                nvars,
                p.terms()
                    .filter(|(m, _)| m.total_degree() < n)
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
            .expect("same nvars")
        }
    }
}

/// Full multivariate division: the remainder of `p` modulo `reducers`.
fn reduce_full(
    p: Polynomial,
    reducers: &[Polynomial],
    order: &MonomialOrder,
    cut: Option<u32>,
) -> Polynomial {
    let lts: Vec<(Exponent, Rat)> = reducers
        .iter()
        .map(|g| {
            let (m, c) = order.leading_term(g).expect("reducers nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = truncate_terms(p, cut);
    let mut remainder = Polynomial::zero(work.nvars());
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = order.leading_term(&work).expect("nonzero");
            (m.clone(), c.clone())
        };
        let hit = lts.iter().position(|(m, _)| m.divides(&lm));
        match hit {
            Some(k) => {
                let shift = lm.checked_sub(&lts[k].0).expect("divides");
                let factor = &lc / &lts[k].1;
                let sub = reducers[k].mul_term(&shift, &factor);
                work = truncate_terms(work.sub(&sub).expect("same nvars"), cut);
            }
            None => {
                remainder = remainder
                    .add(&Polynomial::monomial(lm.clone(), lc.clone()))
                    .expect("same nvars");
                work = work.sub(&Polynomial::monomial(lm, lc)).expect("same nvars");
            }
        }
    }
    remainder
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    wdeg: u64,
    lcm: Exponent,
    i: usize,
    j: usize,
}

fn pair_key(order: &MonomialOrder, lts: &[Exponent], i: usize, j: usize) -> PairKey {
    let lcm = lts[i].lcm(&lts[j]);
    PairKey {
        wdeg: order.weighted_degree(&lcm),
        lcm,
        i,
        j,
    }
}

/// Buchberger's algorithm with normal strategy and the coprimality and
/// chain criteria; `cut = Some(n)` computes modulo `m^n` (the caller must
/// include the degree-`n` monomials among `gens`).
fn buchberger_engine(
    gens: &[Polynomial],
    order: &MonomialOrder,
    cut: Option<u32>,
) -> Vec<Polynomial> {
    // Input generators are taken as-is; callers computing modulo m^n
    // pre-truncate the non-monomial generators and supply the degree-n
    // monomials, which must survive here.
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.content_normalized());
        }
    }
    if basis.is_empty() {
        return basis;
    }
    basis.sort_by(|a, b| {
        let la = order.leading_term(a).expect("nonzero").0;
        let lb = order.leading_term(b).expect("nonzero").0;
        order.cmp(la, lb).then_with(|| a.cmp_terms(b))
    });
    basis.dedup();

    let mut lts: Vec<Exponent> = basis
        .iter()
        .map(|g| order.leading_term(g).expect("nonzero").0.clone())
        .collect();

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BTreeSet<PairKey>,
                     pending: &mut HashSet<(usize, usize)>,
                     basis: &[Polynomial],
                     lts: &[Exponent],
                     i: usize,
                     j: usize| {
        // S-polynomial of two single terms is identically zero.
        if basis[i].num_terms() == 1 && basis[j].num_terms() == 1 {
            return;
        }
        queue.insert(pair_key(order, lts, i, j));
        pending.insert((i, j));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, &lts, i, j);
        }
    }

    while let Some(key) = queue.pop_first() {
        let (i, j) = (key.i, key.j);
        pending.remove(&(i, j));
        // Coprimality criterion.
        if lts[i].is_coprime_with(&lts[j]) {
            continue;
        }
        // Chain criterion: some k with LT_k | lcm and both pairs handled.
        let lcm = &key.lcm;
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lts[k].divides(lcm)
                && !pending.contains(&(k.min(i), k.max(i)))
                && !pending.contains(&(k.min(j), k.max(j)))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let reduced = reduce_full(s, &basis, order, cut);
        if reduced.is_zero() {
            continue;
        }
        let reduced = reduced.content_normalized();
        let new_idx = basis.len();
        lts.push(order.leading_term(&reduced).expect("nonzero").0.clone());
        basis.push(reduced);
        for k in 0..new_idx {
            push_pair(&mut queue, &mut pending, &basis, &lts, k, new_idx);
        }
    }

    interreduce(basis, order, cut)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = order.leading_term(f).expect("nonzero");
    let (gm, gc) = order.leading_term(g).expect("nonzero");
    let lcm = fm.lcm(gm);
    let fs = f.mul_term(
        &lcm.checked_sub(fm).expect("lcm divisible"),
        &(Rat::one() / fc),
    );
    let gs = g.mul_term(
        &lcm.checked_sub(gm).expect("lcm divisible"),
        &(Rat::one() / gc),
    );
    fs.sub(&gs).expect("same nvars")
}

/// Minimalize and tail-reduce a Groebner basis into the reduced basis,
/// sorted by leading term ascending, with unit leading coefficients.
fn interreduce(
    mut basis: Vec<Polynomial>,
    order: &MonomialOrder,
    cut: Option<u32>,
) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        let la = order.leading_term(a).expect("nonzero").0;
        let lb = order.leading_term(b).expect("nonzero").0;
        order.cmp(la, lb).then_with(|| a.cmp_terms(b))
    });
    // Minimal basis: drop entries whose leading term is divisible by a
    // kept entry's leading term.
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = order.leading_term(&g).expect("nonzero").0.clone();
        if !kept
            .iter()
            .any(|h| order.leading_term(h).expect("nonzero").0.divides(&lg))
        {
            kept.push(g);
        }
    }
    // Tail reduction until fixpoint. Single-term elements have no tail;
    // skipping them also keeps the m^n monomial generators, which eager
    // truncation would otherwise reduce to zero against themselves.
    loop {
        let mut changed = false;
        for idx in 0..kept.len() {
            if kept[idx].num_terms() == 1 {
                continue;
            }
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let reduced = reduce_full(kept[idx].clone(), &others, order, cut);
            if reduced != kept[idx] {
                debug_assert!(!reduced.is_zero(), "minimal basis element vanished");
                kept[idx] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in kept.iter_mut() {
        let lc = order.leading_term(g).expect("nonzero").1.clone();
        *g = g.scale(&(Rat::one() / lc));
    }
    kept.sort_by(|a, b| {
        let la = order.leading_term(a).expect("nonzero").0;
        let lb = order.leading_term(b).expect("nonzero").0;
        order.cmp(la, lb)
    });
    kept
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger_reduced(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    buchberger_engine(gens, order, None)
}

/// True iff the system `{g = 0 : g in gens}` has no common zero with all
/// coordinates nonzero over the algebraic closure.
///
/// Adjoins an auxiliary variable `z` with the relation
/// `z * x_1 * ... * x_n - 1` and tests whether the reduced basis is `{1}`.
pub fn saturation_contains_one(gens: &[Polynomial]) -> Result<bool> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        // No constraints: every torus point is a common zero.
        return Ok(false);
    };
    let n = first.nvars();
    let mut ext: Vec<Polynomial> = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.nvars(),
            });
        }
        ext.push(g.extend_vars(1));
    }
    let prod = Exponent(vec![1; n + 1]);
    let relation = Polynomial::monomial(prod, Rat::one())
        .sub(&Polynomial::one(n + 1))
        .expect("same nvars");
    ext.push(relation);
    let ideal = Ideal::new(n + 1, ext, MonomialOrder::all_ones(n + 1))?;
    Ok(ideal.is_unit_ideal())
}

impl Polynomial {
    /// Deterministic total comparison on the raw term maps (storage order);
    /// used only to make basis processing order canonical.
    fn cmp_terms(&self, other: &Polynomial) -> std::cmp::Ordering {
        let a: Vec<_> = self.terms().collect();
        let b: Vec<_> = other.terms().collect();
        a.cmp(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str, names: &[&str]) -> Polynomial {
        parse_polynomial(text, &vars(names)).unwrap()
    }

    fn ideal(texts: &[&str], names: &[&str]) -> Ideal {
        let n = names.len();
        let gens = texts.iter().map(|t| p(t, names)).collect();
        Ideal::new(n, gens, MonomialOrder::all_ones(n)).unwrap()
    }

    #[test]
    fn monomial_generators_normalize() {
        let i = ideal(&["2*x", "3*y^2"], &["x", "y"]);
        assert_eq!(
            i.reduced_basis(),
            &[p("x", &["x", "y"]), p("y^2", &["x", "y"])]
        );
    }

    #[test]
    fn jacobian_of_cusp() {
        let i = ideal(&["2*x", "3*y^2"], &["x", "y"]);
        match i.standard_monomials(None).unwrap() {
            StandardMonomials::Finite(ms) => {
                assert_eq!(ms, vec![Exponent(vec![0, 0]), Exponent(vec![0, 1])]);
            }
            StandardMonomials::Infinite => panic!("finite expected"),
        }
    }

    #[test]
    fn twisted_cubic_has_infinite_quotient() {
        let i = ideal(&["y - x^2", "z - x^3"], &["x", "y", "z"]);
        assert_eq!(
            i.standard_monomials(None).unwrap(),
            StandardMonomials::Infinite
        );
        assert_eq!(i.colength().unwrap(), Colength::Infinite);
    }

    #[test]
    fn normal_form_examples() {
        let i = ideal(&["x^2"], &["x", "y"]);
        assert!(i.normal_form(&p("x^2*y", &["x", "y"])).unwrap().is_zero());

        // Euler identity: f lies in its Jacobian ideal for homogeneous f.
        let j = ideal(&["2*x", "3*y^2"], &["x", "y"]);
        assert!(j
            .normal_form(&p("x^2 + y^3", &["x", "y"]))
            .unwrap()
            .is_zero());

        let m = ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(
            m.normal_form(&p("1", &["x", "y"])).unwrap(),
            p("1", &["x", "y"])
        );
    }

    #[test]
    fn staircase_count() {
        let i = ideal(&["3*x^2", "5*y^4"], &["x", "y"]);
        match i.standard_monomials(None).unwrap() {
            StandardMonomials::Finite(ms) => assert_eq!(ms.len(), 8),
            StandardMonomials::Infinite => panic!("finite expected"),
        }
        let m = ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(
            m.standard_monomials(None).unwrap(),
            StandardMonomials::Finite(vec![Exponent(vec![0, 0])])
        );
    }

    #[test]
    fn local_colength_cusp() {
        let i = ideal(&["2*x", "3*y^2"], &["x", "y"]);
        assert_eq!(i.local_colength_at_origin().unwrap(), Colength::Finite(2));
    }

    #[test]
    fn local_colength_two_segment_quintic() {
        // f = x^5 + x^2 y^2 + y^5
        let jac = ideal(&["5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"], &["x", "y"]);
        assert_eq!(jac.colength().unwrap(), Colength::Finite(16));
        assert_eq!(
            jac.local_colength_at_origin().unwrap(),
            Colength::Finite(11)
        );

        let scaled = ideal(
            &[
                "x^6 + x^3*y^2 + x*y^5",
                "x^5*y + x^2*y^3 + y^6",
                "5*x^4 + 2*x*y^2",
                "2*x^2*y + 5*y^4",
            ],
            &["x", "y"],
        );
        assert_eq!(
            scaled.local_colength_at_origin().unwrap(),
            Colength::Finite(11)
        );
        assert_ne!(scaled.colength().unwrap(), jac.colength().unwrap());
    }

    #[test]
    fn local_colength_non_isolated() {
        // f = x^2 y^2 has non-isolated critical locus.
        let i = ideal(&["2*x*y^2", "2*x^2*y"], &["x", "y"]);
        assert_eq!(i.local_colength_at_origin().unwrap(), Colength::Infinite);
    }

    #[test]
    fn colength_shrinks_under_extra_generators() {
        let i = ideal(&["5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"], &["x", "y"]);
        let base = i.local_colength_at_origin().unwrap().finite().unwrap();
        let bigger = i
            .with_extra_generators(&[p("x^2*y^2", &["x", "y"])])
            .unwrap();
        let shrunk = bigger.local_colength_at_origin().unwrap().finite().unwrap();
        assert!(shrunk <= base);
        assert_eq!(base, 11);
        assert_eq!(shrunk, 10);
    }

    #[test]
    fn stabilization_is_permanent() {
        let i = ideal(&["5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"], &["x", "y"]);
        // Once two consecutive values agree, later ones stay put.
        let c17 = i.colength_mod_power(17);
        let c18 = i.colength_mod_power(18);
        let c19 = i.colength_mod_power(19);
        assert_eq!(c17, 11);
        assert_eq!(c17, c18);
        assert_eq!(c18, c19);
    }

    #[test]
    fn saturation_examples() {
        let x = p("x", &["x", "y"]);
        let y = p("y", &["x", "y"]);
        assert!(saturation_contains_one(&[x.clone(), y]).unwrap());
        let sum = p("x + y", &["x", "y"]);
        assert!(!saturation_contains_one(&[sum]).unwrap());
        // The full gradient of x^5 + x^2 y^2 + y^5 has five critical
        // points on the torus (x y = 4/25, e.g. x = y = -2/5) ...
        let g1 = p("5*x^4 + 2*x*y^2", &["x", "y"]);
        let g2 = p("2*x^2*y + 5*y^4", &["x", "y"]);
        assert!(!saturation_contains_one(&[g1.clone(), g2]).unwrap());
        // ... while the per-face system of its x-heavy Newton facet does not.
        let face_partial = p("2*x^2*y", &["x", "y"]);
        assert!(saturation_contains_one(&[g1, face_partial]).unwrap());
    }

    #[test]
    fn unit_ideal_handling() {
        let i = ideal(&["x", "y", "1"], &["x", "y"]);
        assert!(i.is_unit_ideal());
        assert_eq!(
            i.standard_monomials(None).unwrap(),
            StandardMonomials::Finite(vec![])
        );
        assert_eq!(i.local_colength_at_origin().unwrap(), Colength::Finite(0));
    }

    #[test]
    fn ideal_equality_via_bases() {
        let a = ideal(&["2*x + 2*y", "y^2"], &["x", "y"]);
        let b = ideal(&["x + y", "3*y^2", "x*y^2 + y^3"], &["x", "y"]);
        assert!(a.equals(&b).unwrap());
        let c = ideal(&["x", "y^2"], &["x", "y"]);
        assert!(!a.equals(&c).unwrap());
    }

    #[test]
    fn zero_generators_are_dropped() {
        let zero = Polynomial::zero(2);
        let i = Ideal::new(2, vec![zero], MonomialOrder::all_ones(2)).unwrap();
        assert!(i.reduced_basis().is_empty());
        assert_eq!(
            i.normal_form(&p("x", &["x", "y"])).unwrap(),
            p("x", &["x", "y"])
        );
    }

    #[test]
    fn ideals_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Ideal>();
        assert_send_sync::<Polynomial>();
        // Concurrent readers race the lazy basis computation safely.
        let i = std::sync::Arc::new(ideal(&["5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"], &["x", "y"]));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let i = std::sync::Arc::clone(&i);
                std::thread::spawn(move || i.reduced_basis().len())
            })
            .collect();
        let sizes: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(sizes.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let i = ideal(&["3*x^2", "5*y^4"], &["x", "y"]);
        assert!(matches!(
            i.standard_monomials(Some(3)),
            Err(Error::EnumerationCapExceeded(3))
        ));
        assert!(i.standard_monomials(Some(8)).is_ok());
    }

    #[test]
    fn global_colength_of_jacobian_counts_all_critical_points() {
        // x^3 + y^5: global equals local for a weighted homogeneous germ.
        let i = ideal(&["3*x^2", "5*y^4"], &["x", "y"]);
        assert_eq!(i.colength().unwrap(), Colength::Finite(8));
        assert_eq!(i.local_colength_at_origin().unwrap(), Colength::Finite(8));
    }
}
