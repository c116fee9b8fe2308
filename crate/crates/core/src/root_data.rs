//! Root data, weight-lattice arithmetic, and the finite Weyl group.
//!
//! Built-in types: `GL(n)` on the lattice `Z^n` (so that the determinant
//! direction is available downstream) and `SL(n)` on fundamental-weight
//! coordinates.  Custom data are accepted as a Cartan matrix and realized on
//! fundamental-weight coordinates like `SL`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::CoreError;

/// Integer coordinate vector in the character lattice X.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// Integer coordinate vector in the cocharacter lattice, paired with weights
/// by the standard dot product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coroot(pub Vec<i64>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coroot{:?}", self.0)
    }
}

/// A root together with its coroot and its coordinates in the simple-root
/// basis.
#[derive(Clone, Debug)]
pub struct Root {
    pub weight: Weight,
    pub coroot: Coroot,
    /// Coordinates in the simple-root basis; all nonnegative for a positive
    /// root.
    pub simple_coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinTag {
    Gl(usize),
    Sl(usize),
    FromMatrix,
}

/// A root datum: Cartan matrix plus a concrete realization of the simple
/// roots and coroots on an integer lattice.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub rank: usize,
    pub lattice_dim: usize,
    /// `cartan[s][t] = <alpha_s^vee, alpha_t>`.
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub simple_coroots: Vec<Coroot>,
    pub tag: BuiltinTag,
    positive_roots: Vec<Root>,
}

const MAX_ROOTS: usize = 10_000;

impl RootDatum {
    /// `GL(n)` on the lattice `Z^n`; simple root `s_i = e_i - e_{i+1}`.
    pub fn gl(n: usize) -> Result<RootDatum, CoreError> {
        if n < 1 {
            return Err(CoreError::InvalidDatum("GL rank must be >= 1".into()));
        }
        let rank = n - 1;
        let mut simple_roots = Vec::new();
        let mut simple_coroots = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            simple_roots.push(Weight(v.clone()));
            simple_coroots.push(Coroot(v));
        }
        let cartan = pairing_matrix(&simple_coroots, &simple_roots);
        Self::build(rank, n, cartan, simple_roots, simple_coroots, BuiltinTag::Gl(n))
    }

    /// `SL(n)` on fundamental-weight coordinates (lattice dimension `n-1`).
    pub fn sl(n: usize) -> Result<RootDatum, CoreError> {
        if n < 2 {
            return Err(CoreError::InvalidDatum("SL rank must be >= 2".into()));
        }
        let rank = n - 1;
        let cartan = type_a_cartan(rank);
        Self::from_cartan_with_tag(cartan, BuiltinTag::Sl(n))
    }

    /// Custom datum from a Cartan matrix, realized on fundamental-weight
    /// coordinates: `simple_root[t]` is column `t` of the matrix and
    /// `simple_coroot[s]` is the `s`-th standard dual vector.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootDatum, CoreError> {
        Self::from_cartan_with_tag(cartan, BuiltinTag::FromMatrix)
    }

    fn from_cartan_with_tag(cartan: Vec<Vec<i64>>, tag: BuiltinTag) -> Result<RootDatum, CoreError> {
        let rank = cartan.len();
        if rank == 0 || cartan.iter().any(|row| row.len() != rank) {
            return Err(CoreError::InvalidDatum("Cartan matrix must be square and nonempty".into()));
        }
        let simple_roots: Vec<Weight> = (0..rank)
            .map(|t| Weight((0..rank).map(|s| cartan[s][t]).collect()))
            .collect();
        let simple_coroots: Vec<Coroot> = (0..rank)
            .map(|s| {
                let mut v = vec![0i64; rank];
                v[s] = 1;
                Coroot(v)
            })
            .collect();
        Self::build(rank, rank, cartan, simple_roots, simple_coroots, tag)
    }

    fn build(
        rank: usize,
        lattice_dim: usize,
        cartan: Vec<Vec<i64>>,
        simple_roots: Vec<Weight>,
        simple_coroots: Vec<Coroot>,
        tag: BuiltinTag,
    ) -> Result<RootDatum, CoreError> {
        for s in 0..rank {
            if cartan[s][s] != 2 {
                return Err(CoreError::InvalidDatum("Cartan diagonal must be 2".into()));
            }
            for t in 0..rank {
                if s != t && cartan[s][t] > 0 {
                    return Err(CoreError::InvalidDatum("Cartan off-diagonal must be <= 0".into()));
                }
            }
        }
        let recomputed = pairing_matrix(&simple_coroots, &simple_roots);
        if recomputed != cartan {
            return Err(CoreError::InvalidDatum(
                "stored roots/coroots do not reproduce the Cartan matrix".into(),
            ));
        }
        let mut datum = RootDatum {
            rank,
            lattice_dim,
            cartan,
            simple_roots,
            simple_coroots,
            tag,
            positive_roots: Vec::new(),
        };
        datum.positive_roots = datum.enumerate_positive_roots()?;
        Ok(datum)
    }

    /// Canonical pairing `<coroot, weight>`.
    pub fn pairing(&self, coroot: &Coroot, weight: &Weight) -> Result<i64, CoreError> {
        if coroot.0.len() != self.lattice_dim || weight.0.len() != self.lattice_dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.lattice_dim,
                got: if coroot.0.len() != self.lattice_dim {
                    coroot.0.len()
                } else {
                    weight.0.len()
                },
            });
        }
        Ok(coroot.0.iter().zip(&weight.0).map(|(a, b)| a * b).sum())
    }

    /// Pairing with the `s`-th simple coroot (panics on length mismatch; the
    /// weight is assumed to live on this datum's lattice).
    pub fn simple_pairing(&self, s: usize, weight: &Weight) -> i64 {
        self.simple_coroots[s]
            .0
            .iter()
            .zip(&weight.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn is_dominant(&self, weight: &Weight) -> bool {
        (0..self.rank).all(|s| self.simple_pairing(s, weight) >= 0)
    }

    pub fn is_antidominant(&self, weight: &Weight) -> bool {
        (0..self.rank).all(|s| self.simple_pairing(s, weight) <= 0)
    }

    /// Reflection in the `s`-th simple root.
    pub fn simple_reflect(&self, s: usize, weight: &Weight) -> Weight {
        let c = self.simple_pairing(s, weight);
        weight.sub(&self.simple_roots[s].scale(c))
    }

    /// A weight pairing to exactly 1 with every simple coroot; `rho` for
    /// `GL(n)` is `(n-1, ..., 1, 0)`.
    pub fn rho(&self) -> Weight {
        match self.tag {
            BuiltinTag::Gl(n) => Weight((0..n).map(|i| (n - 1 - i) as i64).collect()),
            _ => Weight(vec![1; self.lattice_dim]),
        }
    }

    /// Positive roots via reflection closure of the simple roots.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    fn enumerate_positive_roots(&self) -> Result<Vec<Root>, CoreError> {
        // Work in simple-root coordinates; a root is positive iff those
        // coordinates are all >= 0.
        let rank = self.rank;
        let mut seen: Vec<Vec<i64>> = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for s in 0..rank {
            let mut rc = vec![0i64; rank];
            rc[s] = 1;
            let mut cc = vec![0i64; rank];
            cc[s] = 1;
            queue.push_back((rc.clone(), cc));
            seen.push(rc);
        }
        let mut all: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        while let Some((rc, cc)) = queue.pop_front() {
            all.push((rc.clone(), cc.clone()));
            if all.len() > MAX_ROOTS {
                return Err(CoreError::NotFiniteType);
            }
            for s in 0..rank {
                // <alpha_s^vee, root> in simple-root coords
                let pair_s_root: i64 = (0..rank).map(|t| self.cartan[s][t] * rc[t]).sum();
                let mut new_rc = rc.clone();
                new_rc[s] -= pair_s_root;
                // <coroot, alpha_s> for the coroot in simple-coroot coords
                let pair_coroot_s: i64 = (0..rank).map(|t| cc[t] * self.cartan[t][s]).sum();
                let mut new_cc = cc.clone();
                new_cc[s] -= pair_coroot_s;
                if !seen.contains(&new_rc) {
                    seen.push(new_rc.clone());
                    queue.push_back((new_rc, new_cc));
                }
            }
        }
        let mut out = Vec::new();
        for (rc, cc) in all {
            if rc.iter().all(|&c| c >= 0) {
                let mut weight = Weight::zero(self.lattice_dim);
                for (t, &c) in rc.iter().enumerate() {
                    weight = weight.add(&self.simple_roots[t].scale(c));
                }
                let mut coroot = vec![0i64; self.lattice_dim];
                for (t, &c) in cc.iter().enumerate() {
                    for (j, &x) in self.simple_coroots[t].0.iter().enumerate() {
                        coroot[j] += c * x;
                    }
                }
                out.push(Root {
                    weight,
                    coroot: Coroot(coroot),
                    simple_coords: rc,
                });
            }
        }
        out.sort_by_key(|r| (r.height(), r.simple_coords.clone()));
        Ok(out)
    }

    /// Highest root of each irreducible component of the root system.
    pub fn component_highest_roots(&self) -> Vec<Root> {
        let comps = self.dynkin_components();
        comps
            .into_iter()
            .map(|comp| {
                self.positive_roots()
                    .iter()
                    .filter(|r| {
                        r.simple_coords
                            .iter()
                            .enumerate()
                            .all(|(t, &c)| c == 0 || comp.contains(&t))
                    })
                    .max_by_key(|r| r.height())
                    .expect("component has roots")
                    .clone()
            })
            .collect()
    }

    fn dynkin_components(&self) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut visited = vec![false; self.rank];
        for start in 0..self.rank {
            if visited[start] {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![start];
            visited[start] = true;
            while let Some(s) = stack.pop() {
                comp.push(s);
                for t in 0..self.rank {
                    if !visited[t] && self.cartan[s][t] != 0 {
                        visited[t] = true;
                        stack.push(t);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

fn pairing_matrix(coroots: &[Coroot], roots: &[Weight]) -> Vec<Vec<i64>> {
    coroots
        .iter()
        .map(|c| {
            roots
                .iter()
                .map(|r| c.0.iter().zip(&r.0).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect()
}

fn type_a_cartan(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// An element of the finite Weyl group: a word in the simple reflections
/// together with its cached linear action on lattice coordinates.
#[derive(Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    /// Row-major `lattice_dim x lattice_dim` matrix acting on weight
    /// coordinates.
    mat: Vec<i64>,
    dim: usize,
}

impl WeylElement {
    pub fn identity(datum: &RootDatum) -> Self {
        let d = datum.lattice_dim;
        let mut mat = vec![0i64; d * d];
        for i in 0..d {
            mat[i * d + i] = 1;
        }
        WeylElement { word: Vec::new(), mat, dim: d }
    }

    pub fn simple(datum: &RootDatum, s: usize) -> Self {
        WeylElement::identity(datum).mul_simple_right(datum, s)
    }

    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(datum);
        for &s in word {
            w = w.mul_simple_right(datum, s);
        }
        w
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn act(&self, weight: &Weight) -> Weight {
        assert_eq!(weight.0.len(), self.dim);
        let mut out = vec![0i64; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[i] += self.mat[i * self.dim + j] * weight.0[j];
            }
        }
        Weight(out)
    }

    /// Action on the dual lattice, so that `<w c, w x> = <c, x>`.
    pub fn act_coroot(&self, datum: &RootDatum, coroot: &Coroot) -> Coroot {
        // Apply the word reflection by reflection.
        let mut c = coroot.clone();
        for &s in self.word.iter().rev() {
            let pair: i64 = c.0.iter().zip(&datum.simple_roots[s].0).map(|(a, b)| a * b).sum();
            let mut v = c.0.clone();
            for (j, x) in v.iter_mut().enumerate() {
                *x -= pair * datum.simple_coroots[s].0[j];
            }
            c = Coroot(v);
        }
        c
    }

    /// Right multiplication by a simple reflection: `self * s`.
    pub fn mul_simple_right(&self, datum: &RootDatum, s: usize) -> WeylElement {
        let d = self.dim;
        // matrix of s acting on weights
        let mut smat = vec![0i64; d * d];
        for j in 0..d {
            let mut col = vec![0i64; d];
            col[j] = 1;
            let im = datum.simple_reflect(s, &Weight(col));
            for i in 0..d {
                smat[i * d + j] = im.0[i];
            }
        }
        let mut mat = vec![0i64; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0;
                for k in 0..d {
                    acc += self.mat[i * d + k] * smat[k * d + j];
                }
                mat[i * d + j] = acc;
            }
        }
        let mut word = self.word.clone();
        word.push(s);
        WeylElement { word, mat, dim: d }
    }

    pub fn mul(&self, datum: &RootDatum, other: &WeylElement) -> WeylElement {
        let mut w = self.clone();
        for &s in other.word.iter() {
            w = w.mul_simple_right(datum, s);
        }
        // Keep a reduced word rather than the concatenation.
        w.reduce_word(datum)
    }

    pub fn inverse(&self, datum: &RootDatum) -> WeylElement {
        let mut w = WeylElement::identity(datum);
        for &s in self.word.iter().rev() {
            w = w.mul_simple_right(datum, s);
        }
        w
    }

    /// Number of positive roots sent negative.
    pub fn length(&self, datum: &RootDatum) -> usize {
        datum
            .positive_roots()
            .iter()
            .filter(|r| !root_is_positive(datum, &self.act(&r.weight)))
            .count()
    }

    /// Replace the stored word by a reduced one.
    ///
    /// If the walk applies `s_{j1}, ..., s_{jk}` to bring `v(probe)` back to
    /// the dominant probe, then `v = s_{j1} ... s_{jk}` read left to right.
    fn reduce_word(mut self, datum: &RootDatum) -> WeylElement {
        let probe = datum.rho();
        let mut x = self.act(&probe);
        let mut word = Vec::new();
        loop {
            let Some(s) = (0..datum.rank).find(|&s| datum.simple_pairing(s, &x) < 0) else {
                break;
            };
            x = datum.simple_reflect(s, &x);
            word.push(s);
        }
        self.word = word;
        self
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| self.mat[i * d + j] == i64::from(i == j)))
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}
impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            let parts: Vec<String> = self.word.iter().map(|s| format!("s{}", s + 1)).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// The image of a root under W is again a root; it is positive exactly when
/// it occurs among the stored positive roots.
pub fn root_is_positive(datum: &RootDatum, w: &Weight) -> bool {
    datum.positive_roots().iter().any(|r| r.weight == *w)
}

/// Greedy dominantization: the unique dominant conjugate together with a
/// minimal-length `v` such that `v(lambda)` is dominant, and `delta =
/// l(v)`.
pub fn dominant_data(datum: &RootDatum, lambda: &Weight) -> (Weight, WeylElement, usize) {
    let mut x = lambda.clone();
    let mut refs: Vec<usize> = Vec::new();
    loop {
        let Some(s) = (0..datum.rank).find(|&s| datum.simple_pairing(s, &x) < 0) else {
            break;
        };
        x = datum.simple_reflect(s, &x);
        refs.push(s);
    }
    // v = s_{jk} ... s_{j1}
    refs.reverse();
    let v = WeylElement::from_word(datum, &refs);
    let delta = refs.len();
    (x, v, delta)
}

/// `delta_lambda`: minimal length of `v` with `v(lambda)` dominant.
pub fn delta(datum: &RootDatum, lambda: &Weight) -> usize {
    dominant_data(datum, lambda).2
}

/// `delta^*_lambda = delta_{w0 lambda}`.
pub fn delta_star(datum: &RootDatum, w0: &WeylElement, lambda: &Weight) -> usize {
    delta(datum, &w0.act(lambda))
}

/// The longest element, by descending from the strictly dominant probe to the
/// antidominant chamber.
pub fn longest_element(datum: &RootDatum) -> WeylElement {
    let probe = datum.rho();
    let mut x = probe;
    let mut word = Vec::new();
    loop {
        let Some(s) = (0..datum.rank).find(|&s| datum.simple_pairing(s, &x) > 0) else {
            break;
        };
        x = datum.simple_reflect(s, &x);
        word.push(s);
    }
    word.reverse();
    let w0 = WeylElement::from_word(datum, &word);
    debug_assert_eq!(w0.length(datum), datum.positive_roots().len());
    w0
}

/// Full enumeration of W by breadth-first closure; intended for small ranks.
pub fn enumerate_weyl(datum: &RootDatum) -> Vec<WeylElement> {
    let mut out = vec![WeylElement::identity(datum)];
    let mut frontier = vec![WeylElement::identity(datum)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..datum.rank {
                let v = w.mul_simple_right(datum, s);
                if !out.contains(&v) {
                    out.push(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        let alpha_vee = &gl2.simple_coroots[0];
        assert_eq!(gl2.pairing(alpha_vee, &Weight(vec![3, 0])).unwrap(), 3);
        assert_eq!(gl2.pairing(alpha_vee, &Weight(vec![1, 1])).unwrap(), 0);
        let gl3 = RootDatum::gl(3).unwrap();
        assert_eq!(
            gl3.pairing(&gl3.simple_coroots[0], &Weight(vec![1, 3, 2])).unwrap(),
            -2
        );
        assert!(matches!(
            gl2.pairing(alpha_vee, &Weight(vec![1, 2, 3])),
            Err(CoreError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dominant_data_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        let (dom, v, d) = dominant_data(&gl2, &Weight(vec![3, 0]));
        assert_eq!(dom, Weight(vec![3, 0]));
        assert!(v.is_identity());
        assert_eq!(d, 0);

        let (dom, v, d) = dominant_data(&gl2, &Weight(vec![0, 3]));
        assert_eq!(dom, Weight(vec![3, 0]));
        assert_eq!(d, 1);
        assert_eq!(v.act(&Weight(vec![0, 3])), dom);

        let gl3 = RootDatum::gl(3).unwrap();
        let (dom, v, d) = dominant_data(&gl3, &Weight(vec![1, 3, 2]));
        assert_eq!(dom, Weight(vec![3, 2, 1]));
        assert_eq!(d, 2);
        assert_eq!(v.act(&Weight(vec![1, 3, 2])), dom);
        assert_eq!(v.length(&gl3), 2);
    }

    #[test]
    fn dominant_data_is_exhaustive_minimum() {
        for datum in [RootDatum::gl(3).unwrap(), RootDatum::sl(3).unwrap(), RootDatum::gl(4).unwrap()] {
            let all = enumerate_weyl(&datum);
            let coords: Vec<i64> = (-6..=6).collect();
            // a deterministic sample of weights
            let mut samples = Vec::new();
            for (i, &a) in coords.iter().enumerate() {
                for (j, &b) in coords.iter().enumerate() {
                    if (i + 2 * j) % 5 == 0 {
                        let mut v = vec![a, b];
                        while v.len() < datum.lattice_dim {
                            v.push(a - b);
                        }
                        samples.push(Weight(v));
                    }
                }
            }
            for lam in samples {
                let (dom, v, d) = dominant_data(&datum, &lam);
                assert!(datum.is_dominant(&dom));
                let best = all
                    .iter()
                    .filter(|w| w.act(&lam) == dom)
                    .map(|w| w.length(&datum))
                    .min()
                    .unwrap();
                assert_eq!(d, best, "lambda {lam:?}");
                assert_eq!(v.length(&datum), d);
                // idempotence
                let (dom2, _, d2) = dominant_data(&datum, &dom);
                assert_eq!(dom2, dom);
                assert_eq!(d2, 0);
            }
        }
    }

    #[test]
    fn weyl_act_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        let s1 = WeylElement::simple(&gl2, 0);
        assert_eq!(s1.act(&Weight(vec![3, 0])), Weight(vec![0, 3]));
        let gl3 = RootDatum::gl(3).unwrap();
        let w0 = longest_element(&gl3);
        assert_eq!(w0.act(&Weight(vec![3, 2, 1])), Weight(vec![1, 2, 3]));
        let e = WeylElement::identity(&gl3);
        assert_eq!(e.act(&Weight(vec![5, -1, 2])), Weight(vec![5, -1, 2]));
    }

    #[test]
    fn positive_root_counts() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert_eq!(gl2.positive_roots().len(), 1);
        assert_eq!(gl2.positive_roots()[0].weight, Weight(vec![1, -1]));
        assert_eq!(longest_element(&gl2).word(), &[0]);

        let gl3 = RootDatum::gl(3).unwrap();
        assert_eq!(gl3.positive_roots().len(), 3);

        for n in 2..=6 {
            let gln = RootDatum::gl(n).unwrap();
            assert_eq!(gln.positive_roots().len(), n * (n - 1) / 2);
        }

        let sl3 = RootDatum::sl(3).unwrap();
        assert_eq!(longest_element(&sl3).length(&sl3), 3);
        let all = enumerate_weyl(&sl3);
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().map(|w| w.length(&sl3)).max().unwrap(), 3);
    }

    #[test]
    fn coroot_action_preserves_pairing() {
        let sl3 = RootDatum::sl(3).unwrap();
        let lam = Weight(vec![2, -1]);
        for w in enumerate_weyl(&sl3) {
            for r in sl3.positive_roots() {
                let lhs = sl3.pairing(&w.act_coroot(&sl3, &r.coroot), &w.act(&lam)).unwrap();
                let rhs = sl3.pairing(&r.coroot, &lam).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_finite_type_rejected() {
        // Affine A_1 Cartan matrix is not of finite type.
        let err = RootDatum::from_cartan(vec![vec![2, -2], vec![-2, 2]]);
        assert!(matches!(err, Err(CoreError::NotFiniteType)));
    }

    #[test]
    fn highest_roots_per_component() {
        let sl3 = RootDatum::sl(3).unwrap();
        let hs = sl3.component_highest_roots();
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].simple_coords, vec![1, 1]);
        // A_1 x A_1
        let d = RootDatum::from_cartan(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(d.component_highest_roots().len(), 2);
    }
}
