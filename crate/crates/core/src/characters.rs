//! q-graded characters of Andersen-Jantzen sheaves and the K-theoretic
//! identities around them.
//!
//! Conventions, pinned by calibration against the graded coordinate ring of
//! the nilpotent cone:
//!
//! * `q` tracks the internal grading: `[M] = Σ dim M_j q^j`, so the twist
//!   `<1>` acts by `q^{-1}` and `{1} = <-1>[1]` acts by `-q`.  The report
//!   layer substitutes `t = -q`.
//! * `ch A_λ = Σ_μ χ(μ) Σ_{w} (-1)^{l(w)} P_q(w·μ - λ)` with `w·μ =
//!   w(μ+ρ) - ρ` and `P_q` the graded partition function over the positive
//!   roots (grading 2 per root).  If calibration were to fail under this
//!   root sign the engine flips to the negative roots; exactly one choice
//!   passes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;

use crate::affine::AffineWeyl;
use crate::error::CoreError;
use crate::root_data::{
    dominant_data, enumerate_weyl, longest_element, BuiltinTag, RootDatum, Weight, WeylElement,
};

/// Laurent polynomial in one variable with integer coefficients; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        let entry = self.0.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> LaurentPoly {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly(self.0.iter().map(|(&e, &k)| (e, k * c)).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    pub fn truncate_above(&self, max_exp: i32) -> LaurentPoly {
        LaurentPoly(self.0.iter().filter(|(&e, _)| e <= max_exp).map(|(&e, &c)| (e, c)).collect())
    }

    /// Rendering in the report variable `t = -q`.
    pub fn to_t_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let tc = if e.rem_euclid(2) == 0 { c } else { -c };
                match e {
                    0 => format!("{tc}"),
                    1 => format!("{tc}*t"),
                    _ => format!("{tc}*t^{e}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}q"),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// A finitely truncated virtual graded character in the Weyl-character
/// basis: dominant weight -> Laurent polynomial.  Coefficients are reliable
/// for exponents `<= trunc`.
#[derive(Clone, Debug)]
pub struct LaurentCharacter {
    pub trunc: i32,
    coeffs: BTreeMap<Weight, LaurentPoly>,
}

impl LaurentCharacter {
    pub fn zero(trunc: i32) -> Self {
        LaurentCharacter {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Weight, LaurentPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &Weight) -> LaurentPoly {
        self.coeffs.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn insert(&mut self, w: Weight, p: LaurentPoly) {
        let p = p.truncate_above(self.trunc);
        if !p.is_zero() {
            self.coeffs.insert(w, p);
        } else {
            self.coeffs.remove(&w);
        }
    }

    pub fn add_term(&mut self, w: &Weight, p: &LaurentPoly) {
        let cur = self.coeff(w).add(p).truncate_above(self.trunc);
        if cur.is_zero() {
            self.coeffs.remove(w);
        } else {
            self.coeffs.insert(w.clone(), cur);
        }
    }

    pub fn add(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(self.trunc.min(other.trunc));
        for (w, p) in &self.coeffs {
            out.add_term(w, p);
        }
        for (w, p) in &other.coeffs {
            out.add_term(w, p);
        }
        out
    }

    pub fn sub(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(self.trunc.min(other.trunc));
        for (w, p) in &self.coeffs {
            out.add_term(w, p);
        }
        for (w, p) in &other.coeffs {
            out.add_term(w, &p.neg());
        }
        out
    }

    /// Multiply every coefficient by `q^k`; validity shifts accordingly.
    pub fn shift_q(&self, k: i32) -> LaurentCharacter {
        LaurentCharacter {
            trunc: self.trunc + k,
            coeffs: self.coeffs.iter().map(|(w, p)| (w.clone(), p.shift(k))).collect(),
        }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> LaurentCharacter {
        let d = p.min_degree().unwrap_or(0).max(0);
        let mut out = LaurentCharacter::zero(self.trunc + d);
        for (w, c) in &self.coeffs {
            out.add_term(w, &c.mul(p));
        }
        out
    }

    /// Equality of all coefficients up to the stated exponent bound.
    pub fn eq_up_to(&self, other: &LaurentCharacter, bound: i32) -> bool {
        assert!(bound <= self.trunc && bound <= other.trunc, "comparison beyond validity");
        let keys: HashSet<&Weight> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().all(|w| {
            self.coeff(w).truncate_above(bound) == other.coeff(w).truncate_above(bound)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CalibrationStatus {
    /// Verified against the graded coordinate ring of the nilpotent cone.
    Verified,
    /// Custom datum: convention assumed, not verified.
    Assumed,
}

/// Character computations for one root datum, with memoized graded and
/// ungraded partition functions behind a synchronized cache.
pub struct CharacterEngine {
    datum: RootDatum,
    weyl: Vec<(WeylElement, i64)>,
    w0: WeylElement,
    root_sign: RootSign,
    calibration: CalibrationStatus,
    /// scaled height functional: positive on every positive root
    height_vec: Vec<i64>,
    graded_memo: Mutex<HashMap<(usize, Weight, i32), LaurentPoly>>,
    count_memo: Mutex<HashMap<(usize, Weight), i64>>,
}

const CALIBRATION_TRUNC: i32 = 8;

impl CharacterEngine {
    pub fn new(datum: RootDatum) -> Result<Self, CoreError> {
        let weyl = enumerate_weyl(&datum)
            .into_iter()
            .map(|w| {
                let l = w.length(&datum);
                (w, if l % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        let w0 = longest_element(&datum);
        let height_vec = height_functional(&datum)?;
        let mut engine = CharacterEngine {
            datum,
            weyl,
            w0,
            root_sign: RootSign::Positive,
            calibration: CalibrationStatus::Assumed,
            height_vec,
            graded_memo: Mutex::new(HashMap::new()),
            count_memo: Mutex::new(HashMap::new()),
        };
        if invariant_degrees(&engine.datum).is_some() {
            let oracle = engine.nilpotent_cone_coordinate_ring_character(CALIBRATION_TRUNC)?;
            let zero = Weight::zero(engine.datum.lattice_dim);
            if engine
                .aj_character(&zero, CALIBRATION_TRUNC)
                .eq_up_to(&oracle, CALIBRATION_TRUNC)
            {
                engine.calibration = CalibrationStatus::Verified;
            } else {
                engine.root_sign = RootSign::Negative;
                engine.graded_memo.lock().unwrap().clear();
                if engine
                    .aj_character(&zero, CALIBRATION_TRUNC)
                    .eq_up_to(&oracle, CALIBRATION_TRUNC)
                {
                    engine.calibration = CalibrationStatus::Verified;
                } else {
                    return Err(CoreError::Calibration(
                        "aj_character(0) matches the nilpotent-cone coordinate ring under \
                         neither root sign"
                            .into(),
                    ));
                }
            }
        }
        Ok(engine)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn root_sign(&self) -> RootSign {
        self.root_sign
    }

    pub fn calibration(&self) -> CalibrationStatus {
        self.calibration
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    fn height(&self, w: &Weight) -> i64 {
        self.height_vec.iter().zip(&w.0).map(|(a, b)| a * b).sum()
    }

    /// Graded Kostant partition function: sum over expressions of `ν` as a
    /// nonnegative combination of positive roots of `q^(2 * total
    /// multiplicity)`, truncated at exponent `trunc`.
    pub fn q_kostant(&self, nu: &Weight, trunc: i32) -> LaurentPoly {
        assert!(trunc >= 0);
        let target = match self.root_sign {
            RootSign::Positive => nu.clone(),
            RootSign::Negative => nu.neg(),
        };
        self.q_kostant_rec(0, &target, trunc)
    }

    fn q_kostant_rec(&self, i: usize, nu: &Weight, trunc: i32) -> LaurentPoly {
        if nu.is_zero() {
            return LaurentPoly::one();
        }
        let roots = self.datum.positive_roots();
        if i == roots.len() || self.height(nu) < 0 {
            return LaurentPoly::zero();
        }
        let key = (i, nu.clone(), trunc);
        if let Some(hit) = self.graded_memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let mut out = LaurentPoly::zero();
        let mut rest = nu.clone();
        let mut m = 0i32;
        while 2 * m <= trunc && self.height(&rest) >= 0 {
            let sub = self.q_kostant_rec(i + 1, &rest, trunc - 2 * m);
            out = out.add(&sub.shift(2 * m));
            rest = rest.sub(&roots[i].weight);
            m += 1;
        }
        let out = out.truncate_above(trunc);
        self.graded_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Ungraded partition count (exact, no truncation).
    fn kostant_count(&self, nu: &Weight) -> i64 {
        self.kostant_count_rec(0, nu)
    }

    fn kostant_count_rec(&self, i: usize, nu: &Weight) -> i64 {
        if nu.is_zero() {
            return 1;
        }
        let roots = self.datum.positive_roots();
        if i == roots.len() || self.height(nu) < 0 {
            return 0;
        }
        let key = (i, nu.clone());
        if let Some(&hit) = self.count_memo.lock().unwrap().get(&key) {
            return hit;
        }
        let mut total = 0i64;
        let mut rest = nu.clone();
        while self.height(&rest) >= 0 {
            total += self.kostant_count_rec(i + 1, &rest);
            rest = rest.sub(&roots[i].weight);
        }
        self.count_memo.lock().unwrap().insert(key, total);
        total
    }

    /// All elements of the positive-root cone whose graded partition
    /// function is nonzero at or below `q^trunc`.
    fn cone_up_to(&self, trunc: i32) -> Vec<Weight> {
        let depth = (trunc / 2) as usize;
        let mut seen: HashSet<Weight> = HashSet::new();
        let zero = Weight::zero(self.datum.lattice_dim);
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in &frontier {
                for r in self.datum.positive_roots() {
                    let s = w.add(&r.weight);
                    if seen.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// `ch A_λ` in the Weyl-character basis:
    /// `c_μ(q) = Σ_w (-1)^{l(w)} P_q(w(μ+ρ) - ρ - λ)`.
    pub fn aj_character(&self, lambda: &Weight, trunc: i32) -> LaurentCharacter {
        let rho = self.datum.rho();
        let sign_dir = match self.root_sign {
            RootSign::Positive => 1,
            RootSign::Negative => -1,
        };
        // candidate dominant μ: w^{-1}·(λ + ν) over cone elements ν
        let mut candidates: HashSet<Weight> = HashSet::new();
        for nu in self.cone_up_to(trunc) {
            let plus = lambda.add(&nu.scale(sign_dir)).add(&rho);
            for (w, _) in &self.weyl {
                let winv = w.inverse(&self.datum);
                let mu = winv.act(&plus).sub(&rho);
                if self.datum.is_dominant(&mu) {
                    candidates.insert(mu);
                }
            }
        }
        let mut out = LaurentCharacter::zero(trunc);
        for mu in candidates {
            let mu_rho = mu.add(&rho);
            let mut c = LaurentPoly::zero();
            for (w, sign) in &self.weyl {
                let arg = w.act(&mu_rho).sub(&rho).sub(lambda);
                let p = self.q_kostant(&arg, trunc);
                c = c.add(&p.scale(*sign));
            }
            out.insert(mu, c);
        }
        out
    }

    /// `[∇̄_λ] = q^{δ*_λ} [A_λ]` for dominant λ.
    pub fn nabla_bar_character(&self, lambda: &Weight, trunc: i32) -> Result<LaurentCharacter, CoreError> {
        if !self.datum.is_dominant(lambda) {
            return Err(CoreError::Invalid(format!("{lambda} is not dominant")));
        }
        let ds = crate::root_data::delta_star(&self.datum, &self.w0, lambda) as i32;
        Ok(self.aj_character(lambda, trunc + ds).shift_q(ds).truncated(trunc))
    }

    /// `[Δ̄_λ] = q^{-δ*_λ} [A_{w0 λ}]` for dominant λ.
    pub fn delta_bar_character(&self, lambda: &Weight, trunc: i32) -> Result<LaurentCharacter, CoreError> {
        if !self.datum.is_dominant(lambda) {
            return Err(CoreError::Invalid(format!("{lambda} is not dominant")));
        }
        let ds = crate::root_data::delta_star(&self.datum, &self.w0, lambda) as i32;
        Ok(self
            .aj_character(&self.w0.act(lambda), trunc)
            .shift_q(-ds)
            .truncated(trunc))
    }

    /// Weight multiplicities of the Weyl module `M(λ)` (equivalently of
    /// `∇(λ)`), by the Kostant multiplicity formula.
    pub fn weyl_weight_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, i64>, CoreError> {
        if !self.datum.is_dominant(lambda) {
            return Err(CoreError::Invalid(format!("{lambda} is not dominant")));
        }
        let rho = self.datum.rho();
        let lowest = self.w0.act(lambda);
        let span = self.height(&lambda.sub(&lowest));
        // dominant candidates: λ - ν over the cone, bounded by the height of
        // λ - w0(λ)
        let mut dominants: Vec<(Weight, i64)> = Vec::new();
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut frontier = vec![Weight::zero(self.datum.lattice_dim)];
        seen.insert(frontier[0].clone());
        while let Some(nu) = frontier.pop() {
            let mu = lambda.sub(&nu);
            if self.datum.is_dominant(&mu) {
                let m: i64 = self
                    .weyl
                    .iter()
                    .map(|(w, sign)| {
                        let arg = w.act(&lambda.add(&rho)).sub(&rho).sub(&mu);
                        sign * self.kostant_count(&arg)
                    })
                    .sum();
                if m != 0 {
                    dominants.push((mu, m));
                }
            }
            for r in self.datum.positive_roots() {
                let s = nu.add(&r.weight);
                if self.height(&s) <= span && seen.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        // expand to full W-orbits
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for (mu, m) in dominants {
            let mut orbit: HashSet<Weight> = HashSet::new();
            for (w, _) in &self.weyl {
                orbit.insert(w.act(&mu));
            }
            for x in orbit {
                out.insert(x, m);
            }
        }
        Ok(out)
    }

    /// Klimyk product: multiply a Weyl-basis character by `χ(λ)`.
    pub fn klimyk_mul(&self, x: &LaurentCharacter, lambda: &Weight) -> Result<LaurentCharacter, CoreError> {
        let weights = self.weyl_weight_multiplicities(lambda)?;
        let rho = self.datum.rho();
        let mut out = LaurentCharacter::zero(x.trunc);
        for (mu, poly) in x.coeffs() {
            for (xi, m) in &weights {
                let v = mu.add(xi).add(&rho);
                // dot-dominantize χ(μ + ξ)
                let (dom, w, _) = dominant_data(&self.datum, &v);
                if (0..self.datum.rank).any(|s| self.datum.simple_pairing(s, &dom) == 0) {
                    continue; // singular: χ = 0
                }
                let sign = if w.length(&self.datum) % 2 == 0 { 1 } else { -1 };
                out.add_term(&dom.sub(&rho), &poly.scale(sign * m));
            }
        }
        Ok(out)
    }

    /// `ch(O_N ⊗ M(λ)) = ch A_0 * χ(λ)`.
    pub fn free_module_character(&self, lambda: &Weight, trunc: i32) -> Result<LaurentCharacter, CoreError> {
        if !self.datum.is_dominant(lambda) {
            return Err(CoreError::Invalid(format!("{lambda} is not dominant")));
        }
        self.klimyk_mul(&self.aj_character(&Weight::zero(self.datum.lattice_dim), trunc), lambda)
    }

    /// The character shadow of the free-module filtration:
    /// `ch(O_N ⊗ M(λ)) = Σ_{ξ ∈ wt M(λ)} ch A_ξ`.
    pub fn verify_aj_sum_identity(&self, lambda: &Weight, trunc: i32) -> Result<bool, CoreError> {
        let lhs = self.free_module_character(lambda, trunc)?;
        let mut rhs = LaurentCharacter::zero(trunc);
        for (xi, m) in self.weyl_weight_multiplicities(lambda)? {
            let aj = self.aj_character(&xi, trunc);
            for (w, p) in aj.coeffs() {
                rhs.add_term(w, &p.scale(m));
            }
        }
        Ok(lhs.eq_up_to(&rhs, trunc))
    }

    /// Graded character of `k[N] = S(g*) ⊗ Π (1 - q^{2 d_i})`, computed from
    /// the symmetric algebra of g and the fundamental invariant degrees.
    /// This is the calibration oracle; it never goes through `q_kostant`.
    pub fn nilpotent_cone_coordinate_ring_character(
        &self,
        trunc: i32,
    ) -> Result<LaurentCharacter, CoreError> {
        let Some(degrees) = invariant_degrees(&self.datum) else {
            return Err(CoreError::Calibration(
                "invariant degrees unknown for a custom datum".into(),
            ));
        };
        // weights of g: all roots plus Cartan zeros
        let mut g_weights: Vec<Weight> = Vec::new();
        for r in self.datum.positive_roots() {
            g_weights.push(r.weight.clone());
            g_weights.push(r.weight.neg());
        }
        let cartan_dim = match self.datum.tag {
            BuiltinTag::Gl(n) => n,
            _ => self.datum.rank,
        };
        for _ in 0..cartan_dim {
            g_weights.push(Weight::zero(self.datum.lattice_dim));
        }
        // S(g*) as a weight-indexed generating function, truncated
        let mut sym: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
        sym.insert(Weight::zero(self.datum.lattice_dim), LaurentPoly::one());
        for xi in &g_weights {
            let mut next: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
            for (w, p) in &sym {
                let mut m = 0i32;
                let mut shifted = w.clone();
                while 2 * m <= trunc {
                    let q = p.shift(2 * m).truncate_above(trunc);
                    if !q.is_zero() {
                        let entry = next.entry(shifted.clone()).or_insert_with(LaurentPoly::zero);
                        *entry = entry.add(&q);
                    }
                    shifted = shifted.add(xi);
                    m += 1;
                }
            }
            next.retain(|_, p| !p.is_zero());
            sym = next;
        }
        // multiply by the invariant factor
        let mut factor = LaurentPoly::one();
        for d in degrees {
            factor = factor.mul(&LaurentPoly::one().sub(&LaurentPoly::monomial(2 * d, 1)));
        }
        for p in sym.values_mut() {
            *p = p.mul(&factor).truncate_above(trunc);
        }
        sym.retain(|_, p| !p.is_zero());
        // convert the W-invariant weight generating function to the Weyl basis
        let mut out = LaurentCharacter::zero(trunc);
        let mut guard = 0usize;
        while let Some((mu, c)) = sym
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .max_by_key(|(w, _)| (self.height(w), std::cmp::Reverse((*w).clone())))
            .map(|(w, p)| (w.clone(), p.clone()))
        {
            guard += 1;
            assert!(guard < 1_000_000, "Weyl-basis conversion failed to terminate");
            assert!(
                self.datum.is_dominant(&mu),
                "height-maximal weight of a W-invariant character must be dominant"
            );
            out.add_term(&mu, &c);
            for (xi, m) in self.weyl_weight_multiplicities(&mu)? {
                let entry = sym.entry(xi).or_insert_with(LaurentPoly::zero);
                *entry = entry.sub(&c.scale(m));
            }
            sym.retain(|_, p| !p.is_zero());
        }
        Ok(out)
    }
}

impl LaurentCharacter {
    /// Lower the validity bound and drop coefficients beyond it.
    pub fn truncated(mut self, trunc: i32) -> LaurentCharacter {
        assert!(trunc <= self.trunc);
        self.trunc = trunc;
        let coeffs = std::mem::take(&mut self.coeffs);
        for (w, p) in coeffs {
            let p = p.truncate_above(trunc);
            if !p.is_zero() {
                self.coeffs.insert(w, p);
            }
        }
        self
    }
}

/// Fundamental invariant degrees: `1..n` for gl_n, `2..n` for sl_n.
fn invariant_degrees(datum: &RootDatum) -> Option<Vec<i32>> {
    match datum.tag {
        BuiltinTag::Gl(n) => Some((1..=n as i32).collect()),
        BuiltinTag::Sl(n) => Some((2..=n as i32).collect()),
        BuiltinTag::FromMatrix => None,
    }
}

/// An integer functional strictly positive on every positive root (a scaled
/// sum of fundamental coweights).
fn height_functional(datum: &RootDatum) -> Result<Vec<i64>, CoreError> {
    use crate::field::{Rat, Scalar};
    use crate::linalg::{solve, Mat};
    use num_traits::One;
    // solve u . alpha_t = 1 for all t; scale to integers
    let d = datum.lattice_dim;
    let r = datum.rank;
    let mut m = Mat::<Rat>::zero(r, d);
    for t in 0..r {
        for i in 0..d {
            m[(t, i)] = Rat::from_int(datum.simple_roots[t].0[i]);
        }
    }
    let rhs = vec![Rat::one(); r];
    let sol = solve(&m, &rhs).ok_or_else(|| {
        CoreError::InvalidDatum("no height functional; datum is degenerate".into())
    })?;
    let lcm = sol
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let out: Vec<i64> = sol
        .iter()
        .map(|x| {
            let v = x.numer() * (&lcm / x.denom());
            i64::try_from(v).expect("height functional fits i64")
        })
        .collect();
    Ok(out)
}

/// Result of expanding targets in a triangular basis.
#[derive(Debug)]
pub struct TriangularReport {
    /// `matrix[t][b]` = coefficient of basis `b` in target `t`.
    pub matrix: Vec<Vec<LaurentPoly>>,
    pub unitriangular: bool,
    pub failures: Vec<String>,
}

/// Expand each target over the given basis, degreewise in q.  Every basis
/// character must have its minimal q-layer equal to `±χ(lead)`; leads must
/// be distinct.  Targets carry their own lead weights for the
/// unitriangularity verdict, which is judged against `weight_leq`.
///
/// The verdict is unitriangularity of the q-filtration: each diagonal entry
/// must be `1` plus strictly positive powers of q, and every nonzero
/// off-diagonal entry must sit at a basis lead strictly below the target
/// lead.  (Filtered objects contribute twists of the diagonal class, so
/// demanding the diagonal be literally 1 would reject genuinely triangular
/// families.)
pub fn triangular_expansion(
    aff: &AffineWeyl,
    targets: &[(Weight, LaurentCharacter)],
    basis: &[(Weight, LaurentCharacter)],
) -> Result<TriangularReport, CoreError> {
    // basis lead data: (lead weight, valuation, unit)
    let mut leads = Vec::new();
    for (lead, b) in basis {
        let val = b
            .coeffs()
            .values()
            .filter_map(LaurentPoly::min_degree)
            .min()
            .ok_or_else(|| CoreError::Invalid("zero basis character".into()))?;
        let layer: Vec<(&Weight, i64)> = b
            .coeffs()
            .iter()
            .filter_map(|(w, p)| {
                let c = p.coeff(val);
                (c != 0).then_some((w, c))
            })
            .collect();
        if layer.len() != 1 || layer[0].0 != lead || layer[0].1.abs() != 1 {
            return Err(CoreError::Invalid(format!(
                "basis lead layer must be a single unit multiple of its lead weight, got {layer:?} for lead {lead}"
            )));
        }
        leads.push((lead.clone(), val, layer[0].1));
    }
    for i in 0..leads.len() {
        for j in i + 1..leads.len() {
            if leads[i].0 == leads[j].0 {
                return Err(CoreError::Invalid("duplicate basis leads".into()));
            }
        }
    }
    let bound = targets
        .iter()
        .map(|(_, t)| t.trunc)
        .chain(basis.iter().map(|(_, b)| b.trunc))
        .min()
        .unwrap_or(0);

    let mut matrix = Vec::new();
    let mut failures = Vec::new();
    let mut unitriangular = true;
    for (tlead, target) in targets {
        let mut res = target.clone();
        let mut coeffs = vec![LaurentPoly::zero(); basis.len()];
        let dmin = res
            .coeffs()
            .values()
            .filter_map(LaurentPoly::min_degree)
            .min()
            .unwrap_or(0)
            .min(leads.iter().map(|(_, v, _)| *v).min().unwrap_or(0));
        for d in dmin..=bound {
            for (i, (lead, val, unit)) in leads.iter().enumerate() {
                let a = res.coeff(lead).coeff(d);
                if a != 0 {
                    let c = a * unit; // unit is ±1
                    coeffs[i].add_term(d - val, c);
                    let contrib = basis[i].1.shift_q(d - val);
                    let mut scaled = LaurentCharacter::zero(res.trunc);
                    for (w, p) in contrib.coeffs() {
                        scaled.add_term(w, &p.scale(c));
                    }
                    res = res.sub(&scaled);
                }
            }
            // the d-layer must now be clear
            let leftover: Vec<String> = res
                .coeffs()
                .iter()
                .filter(|(_, p)| p.coeff(d) != 0)
                .map(|(w, p)| format!("{w}: {:?}", p))
                .collect();
            if !leftover.is_empty() {
                return Err(CoreError::NotInSpan);
            }
        }
        // verdict per target
        for (i, (lead, _, _)) in leads.iter().enumerate() {
            if coeffs[i].is_zero() {
                if lead == tlead {
                    unitriangular = false;
                    failures.push(format!("diagonal at {tlead} vanishes"));
                }
                continue;
            }
            if lead == tlead {
                let diag_ok = coeffs[i].coeff(0) == 1 && coeffs[i].min_degree() == Some(0);
                if !diag_ok {
                    unitriangular = false;
                    failures.push(format!("diagonal at {tlead} is {:?}", coeffs[i]));
                }
            } else if !(aff.weight_leq(lead, tlead) && lead != tlead) {
                unitriangular = false;
                failures.push(format!("entry ({tlead}, {lead}) violates the order"));
            }
        }
        matrix.push(coeffs);
    }
    Ok(TriangularReport {
        matrix,
        unitriangular,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootDatum;

    fn sl2_engine() -> CharacterEngine {
        CharacterEngine::new(RootDatum::sl(2).unwrap()).unwrap()
    }

    fn ch(engine: &CharacterEngine, pairs: &[(&[i64], &[(i32, i64)])], trunc: i32) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(trunc);
        for (w, terms) in pairs {
            let mut p = LaurentPoly::zero();
            for &(e, c) in *terms {
                p.add_term(e, c);
            }
            out.insert(Weight(w.to_vec()), p);
        }
        let _ = engine;
        out
    }

    #[test]
    fn q_kostant_examples() {
        let e = sl2_engine();
        assert_eq!(e.q_kostant(&Weight(vec![0]), 4), LaurentPoly::one());
        // nu = k alpha = 2k in fundamental-weight coordinates
        for k in 0..3 {
            assert_eq!(
                e.q_kostant(&Weight(vec![2 * k]), 10),
                LaurentPoly::monomial(2 * k as i32, 1)
            );
        }
        assert!(e.q_kostant(&Weight(vec![-2]), 10).is_zero());
        assert!(e.q_kostant(&Weight(vec![1]), 10).is_zero());

        let e3 = CharacterEngine::new(RootDatum::sl(3).unwrap()).unwrap();
        // alpha_1 + alpha_2 = (1,1): as theta or as alpha_1 + alpha_2
        let p = e3.q_kostant(&Weight(vec![1, 1]), 8);
        let mut expect = LaurentPoly::zero();
        expect.add_term(2, 1);
        expect.add_term(4, 1);
        assert_eq!(p, expect);
    }

    #[test]
    fn aj_character_sl2_examples() {
        let e = sl2_engine();
        assert_eq!(e.calibration(), CalibrationStatus::Verified);
        assert_eq!(e.root_sign(), RootSign::Positive);

        let aj0 = e.aj_character(&Weight(vec![0]), 4);
        let expect = ch(&e, &[(&[0], &[(0, 1)]), (&[2], &[(2, 1)]), (&[4], &[(4, 1)])], 4);
        assert!(aj0.eq_up_to(&expect, 4));

        let aj1 = e.aj_character(&Weight(vec![1]), 4);
        let expect = ch(&e, &[(&[1], &[(0, 1)]), (&[3], &[(2, 1)]), (&[5], &[(4, 1)])], 4);
        assert!(aj1.eq_up_to(&expect, 4));

        let ajm1 = e.aj_character(&Weight(vec![-1]), 4);
        let expect = ch(&e, &[(&[1], &[(2, 1)]), (&[3], &[(4, 1)])], 4);
        assert!(ajm1.eq_up_to(&expect, 4));
    }

    #[test]
    fn aj_effective_for_dominant() {
        for datum in [RootDatum::sl(2).unwrap(), RootDatum::sl(3).unwrap()] {
            let e = CharacterEngine::new(datum).unwrap();
            let dim = e.datum().lattice_dim;
            for a in 0..=2i64 {
                for b in 0..=2i64 {
                    let lam = if dim == 1 {
                        Weight(vec![a])
                    } else {
                        Weight(vec![a, b])
                    };
                    if !e.datum().is_dominant(&lam) {
                        continue;
                    }
                    let aj = e.aj_character(&lam, 8);
                    for p in aj.coeffs().values() {
                        for (exp, c) in p.terms() {
                            assert!(exp >= 0 && c > 0, "effective character expected");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nabla_delta_twists() {
        let e = sl2_engine();
        // delta*_0 = 0
        let n0 = e.nabla_bar_character(&Weight(vec![0]), 4).unwrap();
        assert!(n0.eq_up_to(&e.aj_character(&Weight(vec![0]), 4), 4));
        // delta*_omega = 1: nabla = q * aj(omega)
        let n1 = e.nabla_bar_character(&Weight(vec![1]), 4).unwrap();
        assert!(n1.eq_up_to(&e.aj_character(&Weight(vec![1]), 5).shift_q(1).truncated(4), 4));
        // aj(-omega) = q * nabla(omega) exactly in rank 1
        let ajm = e.aj_character(&Weight(vec![-1]), 4);
        assert!(ajm.eq_up_to(&n1.shift_q(1).truncated(4), 4));
        // non-dominant rejected
        assert!(e.nabla_bar_character(&Weight(vec![-1]), 4).is_err());
    }

    #[test]
    fn pi_aj_congruence_rank1() {
        // aj(nu) - q^{2 delta_nu} aj(dom nu) lies in the span of aj(mu) for
        // dominant mu strictly below dom(nu) in the coset order
        let e = sl2_engine();
        let aff = AffineWeyl::new(RootDatum::sl(2).unwrap());
        let trunc = 6;
        let basis: Vec<(Weight, LaurentCharacter)> = (0..=(2 * trunc as i64))
            .map(|k| {
                let w = Weight(vec![k]);
                let c = e.aj_character(&w, trunc);
                (w, c)
            })
            .collect();
        for nu in -4..=4i64 {
            let w = Weight(vec![nu]);
            let (dom, _, d) = dominant_data(e.datum(), &w);
            let lhs = e.aj_character(&w, trunc);
            let head = e.aj_character(&dom, trunc).shift_q(2 * d as i32).truncated(trunc);
            let diff = lhs.sub(&head);
            let rep = triangular_expansion(&aff, &[(dom.clone(), diff)], &basis).unwrap();
            for (i, c) in rep.matrix[0].iter().enumerate() {
                if !c.is_zero() {
                    let mu = &basis[i].0;
                    assert!(
                        aff.weight_leq(mu, &dom) && mu != &dom,
                        "nu = {nu}: residual term at {mu} is not strictly below {dom}"
                    );
                }
            }
        }
    }

    #[test]
    fn free_module_and_sum_identity() {
        let e = sl2_engine();
        assert!(e.verify_aj_sum_identity(&Weight(vec![0]), 8).unwrap());
        assert!(e.verify_aj_sum_identity(&Weight(vec![1]), 8).unwrap());
        let e3 = CharacterEngine::new(RootDatum::sl(3).unwrap()).unwrap();
        assert!(e3.verify_aj_sum_identity(&Weight(vec![1, 0]), 6).unwrap());
    }

    #[test]
    fn calibration_matches_coordinate_ring_to_q12() {
        for datum in [RootDatum::sl(2).unwrap(), RootDatum::sl(3).unwrap()] {
            let e = CharacterEngine::new(datum).unwrap();
            let oracle = e.nilpotent_cone_coordinate_ring_character(12).unwrap();
            let aj0 = e.aj_character(&Weight::zero(e.datum().lattice_dim), 12);
            assert!(aj0.eq_up_to(&oracle, 12));
        }
    }

    #[test]
    fn triangular_expansion_identity_and_free() {
        let e = sl2_engine();
        let aff = AffineWeyl::new(RootDatum::sl(2).unwrap());
        let trunc = 8;
        let weights: Vec<Weight> = (0..=4).map(|k| Weight(vec![2 * k])).collect();
        let basis: Vec<(Weight, LaurentCharacter)> = weights
            .iter()
            .map(|w| (w.clone(), e.aj_character(w, trunc)))
            .collect();
        // identity expansion
        let rep = triangular_expansion(&aff, &basis, &basis).unwrap();
        assert!(rep.unitriangular);
        for (i, row) in rep.matrix.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(*c, LaurentPoly::one());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        // free modules against the aj basis
        let targets: Vec<(Weight, LaurentCharacter)> = weights
            .iter()
            .map(|w| (w.clone(), e.free_module_character(w, trunc).unwrap()))
            .collect();
        let rep = triangular_expansion(&aff, &targets, &basis).unwrap();
        assert!(rep.unitriangular, "failures: {:?}", rep.failures);

        // a target above the span of the basis
        let high = vec![(Weight(vec![12]), e.aj_character(&Weight(vec![12]), trunc))];
        assert!(matches!(
            triangular_expansion(&aff, &high, &basis),
            Err(CoreError::NotInSpan)
        ));
    }
}
