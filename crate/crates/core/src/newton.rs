//! Newton polyhedron machinery: boundary facets, the piecewise linear
//! weight `h`, the non-degeneracy test, the Newton-filtration Hodge-ideal
//! recursion, and the two jumping spectra `Sp^tau` and `Sp^mu`.
//!
//! The Newton boundary of a convenient germ consists of the compact faces
//! of its Newton polyhedron that avoid the coordinate hyperplanes. For a
//! convenient germ every supporting hyperplane normalized to level 1 has
//! strictly positive coefficients, so each such face is an intersection
//! of compact facets; faces are enumerated that way. The weight function
//! is `h(m) = min over facet forms`, and the shifted filtration ideal at
//! level `beta` is generated by the minimal monomials `m` with
//! `h(m + (1,..,1)) >= beta`.
//!
//! The `tau` jumping ideals are computed along two routes, the Hodge-ideal
//! recursion plus `<f, df>` and the filtration identity
//! `O^{>=beta} + <f, df>`; disagreement in local colength at any grid
//! point is a hard error. The `mu` ideals come from the recursion plus
//! `<df>` alone; their monotonicity is checked and reported, never
//! assumed.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{saturation_contains_one, Colength, Ideal};
use crate::hodge_wh::{decompose_beta, JumpingSpectrum};
use crate::milnor::{milnor_number, tjurina_ideal, tjurina_number};
use crate::order::MonomialOrder;
use crate::poly::{default_variable_names, Exponent, Polynomial};
use crate::rat::{ceil, rat_int, Rat};
use crate::series::FracLaurent;

/// Linear form `l(m) = sum c_i m_i` with `l = 1` on its facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetForm {
    pub coeffs: Vec<Rat>,
}

impl FacetForm {
    pub fn eval(&self, m: &Exponent) -> Rat {
        m.0.iter()
            .zip(&self.coeffs)
            .fold(Rat::zero(), |acc, (&a, c)| acc + c * rat_int(a as i64))
    }

    pub fn eval_rat(&self, m: &[Rat]) -> Rat {
        m.iter()
            .zip(&self.coeffs)
            .fold(Rat::zero(), |acc, (a, c)| acc + c * a)
    }
}

/// A compact face of the Newton boundary: its support points and the set
/// of facets containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub support: Vec<Exponent>,
    pub facets: Vec<usize>,
    pub dim: usize,
}

/// Facet forms and compact faces of the Newton polyhedron of a convenient
/// germ in at most 3 variables.
#[derive(Debug, Clone)]
pub struct NewtonBoundary {
    nvars: usize,
    pub facets: Vec<FacetForm>,
    pub faces: Vec<Face>,
    pub convenient: bool,
}

fn solve_square(mut rows: Vec<Vec<Rat>>, mut rhs: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = rows[col][col].clone();
        for v in rows[col].iter_mut() {
            *v /= &inv;
        }
        rhs[col] /= &inv;
        let pivot_row = rows[col].clone();
        let pivot_rhs = rhs[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    *dst -= src * &factor;
                }
                rhs[r] -= &pivot_rhs * &factor;
            }
        }
    }
    Some(rhs)
}

/// Affine dimension of a point set.
fn affine_dim(points: &[Exponent]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.0.iter()
                .zip(&base.0)
                .map(|(&a, &b)| rat_int(a as i64) - rat_int(b as i64))
                .collect()
        })
        .collect();
    // Row rank by Gaussian elimination.
    let mut rows = diffs;
    let ncols = base.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    *dst -= src * &factor;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Compute the Newton boundary of a convenient germ.
///
/// Errors on more than 3 variables, on non-convenient input (some
/// variable has no pure power in the support), and on germs that do not
/// vanish at the origin.
pub fn newton_boundary(f: &Polynomial) -> Result<NewtonBoundary> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = f.nvars();
    if n > 3 {
        return Err(Error::TooManyVariables(n));
    }
    let support: Vec<Exponent> = f.support().cloned().collect();
    for i in 0..n {
        if !support.iter().any(|m| m.pure_power_var() == Some(i)) {
            let names = default_variable_names(n);
            return Err(Error::NotConvenient(names[i].clone()));
        }
    }

    // Candidate supporting hyperplanes at level 1 through n affinely
    // independent support points; keep those with strictly positive
    // coefficients that bound the whole support from below.
    let mut facets: Vec<FacetForm> = Vec::new();
    let mut consider = |coeffs: Vec<Rat>| {
        if coeffs.iter().any(|c| !c.is_positive()) {
            return;
        }
        let form = FacetForm { coeffs };
        if support.iter().any(|m| form.eval(m) < Rat::one()) {
            return;
        }
        if !facets.contains(&form) {
            facets.push(form);
        }
    };
    match n {
        1 => {
            let a = support.iter().map(|m| m.0[0]).min().expect("nonempty");
            consider(vec![Rat::new(BigInt::one(), BigInt::from(a))]);
        }
        2 => {
            for i in 0..support.len() {
                for j in (i + 1)..support.len() {
                    let rows = vec![
                        support[i].0.iter().map(|&a| rat_int(a as i64)).collect(),
                        support[j].0.iter().map(|&a| rat_int(a as i64)).collect(),
                    ];
                    if let Some(c) = solve_square(rows, vec![Rat::one(), Rat::one()]) {
                        consider(c);
                    }
                }
            }
        }
        3 => {
            for i in 0..support.len() {
                for j in (i + 1)..support.len() {
                    for k in (j + 1)..support.len() {
                        let rows = vec![
                            support[i].0.iter().map(|&a| rat_int(a as i64)).collect(),
                            support[j].0.iter().map(|&a| rat_int(a as i64)).collect(),
                            support[k].0.iter().map(|&a| rat_int(a as i64)).collect(),
                        ];
                        let rhs = vec![Rat::one(), Rat::one(), Rat::one()];
                        if let Some(c) = solve_square(rows, rhs) {
                            consider(c);
                        }
                    }
                }
            }
        }
        _ => unreachable!("nvars checked above"),
    }
    if facets.is_empty() {
        return Err(Error::InvariantViolation(
            "no compact facet found for a convenient germ".into(),
        ));
    }
    facets.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));

    // Faces: nonempty intersections of facet supports, excluding faces
    // contained in a coordinate hyperplane.
    let facet_supports: Vec<Vec<Exponent>> = facets
        .iter()
        .map(|l| {
            support
                .iter()
                .filter(|m| l.eval(m).is_one())
                .cloned()
                .collect()
        })
        .collect();
    let mut faces: Vec<Face> = Vec::new();
    let nf = facets.len();
    for mask in 1u32..(1 << nf) {
        let idxs: Vec<usize> = (0..nf).filter(|i| mask & (1 << i) != 0).collect();
        let mut pts: Vec<Exponent> = facet_supports[idxs[0]].clone();
        for &i in &idxs[1..] {
            pts.retain(|m| facet_supports[i].contains(m));
        }
        if pts.is_empty() {
            continue;
        }
        // Contained in a coordinate hyperplane?
        if (0..n).any(|i| pts.iter().all(|m| m.0[i] == 0)) {
            continue;
        }
        // The face is determined by its point set; record the maximal
        // facet set containing it.
        let all_facets: Vec<usize> = (0..nf)
            .filter(|&i| pts.iter().all(|m| facet_supports[i].contains(m)))
            .collect();
        let dim = affine_dim(&pts);
        let face = Face {
            support: pts,
            facets: all_facets,
            dim,
        };
        if !faces.contains(&face) {
            faces.push(face);
        }
    }
    faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.support.cmp(&b.support)));

    Ok(NewtonBoundary {
        nvars: n,
        facets,
        faces,
        convenient: true,
    })
}

impl NewtonBoundary {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `h(m)`: the minimum of the facet forms at `m`.
    pub fn h(&self, m: &Exponent) -> Rat {
        self.facets
            .iter()
            .map(|l| l.eval(m))
            .min()
            .expect("at least one facet")
    }

    /// `h` on a rational point of the closed positive orthant.
    pub fn h_rat(&self, m: &[Rat]) -> Result<Rat> {
        if m.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: m.len(),
            });
        }
        if m.iter().any(Rat::is_negative) {
            return Err(Error::BetaNotPositive);
        }
        Ok(self
            .facets
            .iter()
            .map(|l| l.eval_rat(m))
            .min()
            .expect("at least one facet"))
    }

    /// Shifted level of a monomial: `h(m + (1,...,1))`.
    pub fn shifted_level(&self, m: &Exponent) -> Rat {
        let shifted = m.add(&Exponent(vec![1; self.nvars]));
        self.h(&shifted)
    }

    /// Facet indices attaining `h(m)`.
    pub fn minimizing_facets(&self, m: &Exponent) -> Vec<usize> {
        let h = self.h(m);
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, l)| l.eval(m) == h)
            .map(|(i, _)| i)
            .collect()
    }

    /// The cone polynomial `f_sigma` of a face: the terms of `f` whose
    /// exponent has all of the face's facets among its minimizers.
    pub fn face_polynomial(&self, f: &Polynomial, face: &Face) -> Polynomial {
        let mut out = Polynomial::zero(f.nvars());
        for (m, c) in f.terms() {
            let mins = self.minimizing_facets(m);
            if face.facets.iter().all(|t| mins.contains(t)) {
                out = out
                    .add(&Polynomial::monomial(m.clone(), c.clone()))
                    .expect("same nvars");
            }
        }
        out
    }
}

/// Per-face outcome of the non-degeneracy test.
#[derive(Debug, Clone)]
pub struct FaceReport {
    pub face: Face,
    pub face_polynomial: Polynomial,
    pub nondegenerate: bool,
}

#[derive(Debug, Clone)]
pub struct NondegeneracyReport {
    pub faces: Vec<FaceReport>,
    pub nondegenerate: bool,
}

/// For every compact face, test whether the partials of `f_sigma` have a
/// common zero on the torus.
pub fn nondegeneracy_check(f: &Polynomial) -> Result<NondegeneracyReport> {
    let boundary = newton_boundary(f)?;
    nondegeneracy_check_with(f, &boundary)
}

pub fn nondegeneracy_check_with(
    f: &Polynomial,
    boundary: &NewtonBoundary,
) -> Result<NondegeneracyReport> {
    let mut faces = Vec::with_capacity(boundary.faces.len());
    let mut all = true;
    for face in &boundary.faces {
        let f_sigma = boundary.face_polynomial(f, face);
        let partials = f_sigma.gradient();
        let nondegenerate = saturation_contains_one(&partials)?;
        all &= nondegenerate;
        faces.push(FaceReport {
            face: face.clone(),
            face_polynomial: f_sigma,
            nondegenerate,
        });
    }
    Ok(NondegeneracyReport {
        faces,
        nondegenerate: all,
    })
}

/// Monomial ideal of the shifted Newton filtration at level `beta`:
/// generated by the divisibility-minimal `m` with `h(m + 1) >= beta`.
pub fn filtration_ideal_nd(boundary: &NewtonBoundary, beta: &Rat) -> Result<Ideal> {
    let n = boundary.nvars;
    let mut limit = vec![0u32; n];
    for (i, lim) in limit.iter_mut().enumerate() {
        let min_coeff = boundary
            .facets
            .iter()
            .map(|l| l.coeffs[i].clone())
            .min()
            .expect("at least one facet");
        if beta.is_positive() {
            *lim =
                u32::try_from(ceil(&(beta / min_coeff))).map_err(|_| Error::BetaNotPositive)? + 1;
        }
    }
    let mut qualifying: Vec<Exponent> = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        cur: &mut Vec<u32>,
        var: usize,
        limit: &[u32],
        boundary: &NewtonBoundary,
        beta: &Rat,
        out: &mut Vec<Exponent>,
    ) {
        if var == limit.len() {
            let m = Exponent(cur.clone());
            if &boundary.shifted_level(&m) >= beta {
                out.push(m);
            }
            return;
        }
        for a in 0..=limit[var] {
            cur[var] = a;
            rec(cur, var + 1, limit, boundary, beta, out);
        }
        cur[var] = 0;
    }
    rec(&mut cur, 0, &limit, boundary, beta, &mut qualifying);
    qualifying.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.0.cmp(&a.0))
    });
    let mut minimal: Vec<Exponent> = Vec::new();
    for m in qualifying {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    Ideal::new(
        n,
        minimal
            .into_iter()
            .map(|m| Polynomial::monomial(m, Rat::one()))
            .collect(),
        MonomialOrder::all_ones(n),
    )
}

/// Context for the non-degenerate pipeline.
#[derive(Debug, Clone)]
pub struct NdContext {
    pub f: Polynomial,
    pub boundary: NewtonBoundary,
    pub nondegeneracy: NondegeneracyReport,
    gradient: Vec<Polynomial>,
    pub mu: usize,
    pub tau: usize,
}

/// A jumping-spectrum sweep over the Newton-level candidate grid.
#[derive(Debug, Clone)]
pub struct NdSweep {
    /// Candidate levels (Newton levels of monomials, capped at `n + 1`)
    /// interleaved with midpoint probes.
    pub grid: Vec<Rat>,
    /// Which grid entries are midpoint probes.
    pub midpoints: Vec<bool>,
    pub sp_tau: JumpingSpectrum,
    pub sp_mu: JumpingSpectrum,
    /// Levels where the `mu` colength decreased (non-monotone filtration).
    pub mu_violations: Vec<Rat>,
    /// Midpoint probes with a nonzero jump: the candidate grid would need
    /// refinement around them.
    pub refinement_requests: Vec<Rat>,
    /// Whether `J^tau` has stabilized to `<f, df>` past the last level.
    pub stabilized: bool,
}

impl NdContext {
    /// Validate and precompute: convenient, non-degenerate, isolated.
    pub fn new(f: Polynomial) -> Result<Self> {
        let boundary = newton_boundary(&f)?;
        let nondegeneracy = nondegeneracy_check_with(&f, &boundary)?;
        if !nondegeneracy.nondegenerate {
            return Err(Error::Degenerate);
        }
        let mu = milnor_number(&f)?;
        let tau = tjurina_number(&f)?;
        let gradient = f.gradient();
        Ok(NdContext {
            f,
            boundary,
            nondegeneracy,
            gradient,
            mu,
            tau,
        })
    }

    /// `I_k(alpha Z)` by the Newton-filtration recursion.
    pub fn hodge_ideal(&self, k: u32, alpha: &Rat) -> Result<Ideal> {
        if !alpha.is_positive() || alpha > &Rat::one() {
            return Err(Error::AlphaOutOfRange);
        }
        if k == 0 {
            return filtration_ideal_nd(&self.boundary, alpha);
        }
        let prev = self.hodge_ideal(k - 1, alpha)?;
        let prev_gens: Vec<Polynomial> = prev.reduced_basis().to_vec();
        let level = alpha + Rat::from_integer(BigInt::from(k));
        let mut gens: Vec<Polynomial> = filtration_ideal_nd(&self.boundary, &level)?
            .generators()
            .to_vec();
        let coeff = &level - Rat::one();
        for g in &prev_gens {
            for (i, df_i) in self.gradient.iter().enumerate() {
                let dg_i = g.partial_derivative(i)?;
                let image = self.f.mul(&dg_i)?.sub(&g.mul(df_i)?.scale(&coeff))?;
                gens.push(image);
            }
            gens.push(self.f.mul(g)?);
        }
        Ideal::new(
            self.f.nvars(),
            gens,
            MonomialOrder::all_ones(self.f.nvars()),
        )
    }

    fn with_tjurina_gens(&self, base: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = base;
        gens.push(self.f.clone());
        gens.extend(self.gradient.iter().cloned());
        Ideal::new(
            self.f.nvars(),
            gens,
            MonomialOrder::all_ones(self.f.nvars()),
        )
    }

    fn with_jacobian_gens(&self, base: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = base;
        gens.extend(self.gradient.iter().cloned());
        Ideal::new(
            self.f.nvars(),
            gens,
            MonomialOrder::all_ones(self.f.nvars()),
        )
    }

    fn finite_local(&self, ideal: &Ideal, what: &str) -> Result<usize> {
        match ideal.local_colength_at_origin()? {
            Colength::Finite(c) => Ok(c),
            Colength::Infinite => Err(Error::InvariantViolation(format!(
                "{what} has infinite local colength"
            ))),
        }
    }

    /// Local colengths of `J^tau_beta` (both routes, asserted equal) and
    /// `J^mu_beta`.
    fn colengths_at(&self, beta: &Rat) -> Result<(usize, usize)> {
        let (k, alpha) = decompose_beta(beta)?;
        let hodge = self.hodge_ideal(k, &alpha)?;
        let hodge_gens = hodge.reduced_basis().to_vec();

        let tau_rec = self.with_tjurina_gens(hodge_gens.clone())?;
        let tau_identity = self.with_tjurina_gens(
            filtration_ideal_nd(&self.boundary, beta)?
                .generators()
                .to_vec(),
        )?;
        let c_rec = self.finite_local(&tau_rec, "J^tau (recursion route)")?;
        let c_id = self.finite_local(&tau_identity, "J^tau (filtration route)")?;
        if c_rec != c_id {
            return Err(Error::InvariantViolation(format!(
                "J^tau route mismatch at beta = {}: recursion {} vs filtration {}",
                beta, c_rec, c_id
            )));
        }

        // J^mu is contained in J^tau, so its colength can only be larger.
        let mu_ideal = self.with_jacobian_gens(hodge_gens)?;
        let c_mu = self.finite_local(&mu_ideal, "J^mu")?;
        if c_mu < c_rec {
            return Err(Error::InvariantViolation(format!(
                "J^mu colength fell below the J^tau colength at beta = {}",
                beta
            )));
        }
        Ok((c_rec, c_mu))
    }

    /// Candidate levels: distinct shifted Newton levels of the monomial
    /// box, within `(0, n + 1]`.
    pub fn candidate_levels(&self) -> Vec<Rat> {
        let n = self.f.nvars();
        let top = rat_int(n as i64 + 1);
        let mut limit = vec![0u32; n];
        for (i, lim) in limit.iter_mut().enumerate() {
            let min_coeff = self
                .boundary
                .facets
                .iter()
                .map(|l| l.coeffs[i].clone())
                .min()
                .expect("facet");
            *lim = u32::try_from(ceil(&(&top / min_coeff))).unwrap_or(0) + 1;
        }
        let mut levels: Vec<Rat> = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(
            cur: &mut Vec<u32>,
            var: usize,
            limit: &[u32],
            ctx_boundary: &NewtonBoundary,
            top: &Rat,
            out: &mut Vec<Rat>,
        ) {
            if var == limit.len() {
                let lvl = ctx_boundary.shifted_level(&Exponent(cur.clone()));
                if lvl.is_positive() && &lvl <= top {
                    out.push(lvl);
                }
                return;
            }
            for a in 0..=limit[var] {
                cur[var] = a;
                rec(cur, var + 1, limit, ctx_boundary, top, out);
            }
            cur[var] = 0;
        }
        rec(&mut cur, 0, &limit, &self.boundary, &top, &mut levels);
        levels.sort();
        levels.dedup();
        levels
    }

    /// Full sweep: `Sp^tau` and `Sp^mu` over the candidate grid with
    /// midpoint probes, monotonicity and stabilization reporting.
    pub fn sp_tau_mu(&self) -> Result<NdSweep> {
        let candidates = self.candidate_levels();
        if candidates.is_empty() {
            return Err(Error::InvariantViolation("empty candidate grid".into()));
        }
        let mut grid: Vec<Rat> = Vec::with_capacity(candidates.len() * 2);
        let mut midpoints: Vec<bool> = Vec::with_capacity(candidates.len() * 2);
        for (i, c) in candidates.iter().enumerate() {
            grid.push(c.clone());
            midpoints.push(false);
            if i + 1 < candidates.len() {
                grid.push((c + &candidates[i + 1]) / rat_int(2));
                midpoints.push(true);
            }
        }
        let min_gap = grid
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .min()
            .unwrap_or_else(|| rat_int(1));
        let eps = min_gap / rat_int(2);

        let mut sp_tau = FracLaurent::zero();
        let mut sp_mu = FracLaurent::zero();
        let mut tau_colengths = Vec::new();
        let mut mu_colengths = Vec::new();
        let mut mu_violations = Vec::new();
        let mut refinement_requests = Vec::new();
        let mut prev_tau_after: Option<usize> = None;
        let mut last_tau_after = 0usize;

        for (idx, beta) in grid.iter().enumerate() {
            let (tau_at, mu_at) = self.colengths_at(beta)?;
            let probe = beta + &eps;
            let (tau_after, mu_after) = self.colengths_at(&probe)?;
            if tau_after < tau_at {
                return Err(Error::InvariantViolation(format!(
                    "J^tau colength decreased across beta = {}",
                    beta
                )));
            }
            if let Some(pa) = prev_tau_after {
                if tau_at != pa {
                    return Err(Error::InvariantViolation(format!(
                        "J^tau colength jumped strictly between grid points below beta = {}",
                        beta
                    )));
                }
            }
            let tau_jump = tau_after - tau_at;
            let mu_jump = mu_after as i64 - mu_at as i64;
            if mu_jump < 0 {
                mu_violations.push(beta.clone());
            }
            if midpoints[idx] && (tau_jump != 0 || mu_jump != 0) {
                refinement_requests.push(beta.clone());
            }
            sp_tau.add_term(beta.clone(), tau_jump as i64);
            sp_mu.add_term(beta.clone(), mu_jump);
            tau_colengths.push((beta.clone(), tau_at));
            mu_colengths.push((beta.clone(), mu_at));
            prev_tau_after = Some(tau_after);
            last_tau_after = tau_after;
        }

        // Past the top candidate, J^tau should have settled at <f, df>.
        let tjurina = tjurina_ideal(&self.f)?;
        let tau_full = self.finite_local(&tjurina, "<f, df>")?;
        let stabilized = last_tau_after == tau_full;

        Ok(NdSweep {
            grid: grid.clone(),
            midpoints,
            sp_tau: JumpingSpectrum {
                candidates: grid.clone(),
                colengths: tau_colengths,
                sp: sp_tau,
            },
            sp_mu: JumpingSpectrum {
                candidates: grid,
                colengths: mu_colengths,
                sp: sp_mu,
            },
            mu_violations,
            refinement_requests,
            stabilized,
        })
    }
}

/// Empirical checks: masses of the two spectra against the Tjurina and
/// Milnor numbers, `mu`-monotonicity, and stabilization of `J^tau`.
#[derive(Debug, Clone)]
pub struct QuestionReport {
    pub sweep: NdSweep,
    pub mu: usize,
    pub tau: usize,
    pub sp_tau_mass: i64,
    pub sp_mu_mass: i64,
    pub tau_mass_matches: bool,
    pub mu_mass_matches: bool,
    pub mu_monotone: bool,
}

pub fn question_checks(ctx: &NdContext) -> Result<QuestionReport> {
    let sweep = ctx.sp_tau_mu()?;
    let sp_tau_mass = sweep.sp_tau.sp.eval_at_one();
    let sp_mu_mass = sweep.sp_mu.sp.eval_at_one();
    Ok(QuestionReport {
        mu: ctx.mu,
        tau: ctx.tau,
        sp_tau_mass,
        sp_mu_mass,
        tau_mass_matches: sp_tau_mass == ctx.tau as i64,
        mu_mass_matches: sp_mu_mass == ctx.mu as i64,
        mu_monotone: sweep.mu_violations.is_empty(),
        sweep,
    })
}
