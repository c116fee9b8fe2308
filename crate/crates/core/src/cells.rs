//! Two-sided Kazhdan-Lusztig cell shapes for the extended affine symmetric
//! group, via the forward pass of the affine matrix-ball construction:
//! channel numbering plus zigzag extraction on one period of the infinite
//! permutation matrix.  Only the shape is computed.
//!
//! Restricted to finite permutations the output must agree with the
//! classical Robinson-Schensted shape; the tests enforce this, together
//! with the deep-translation and identity anchors that pin the orientation
//! of the cell-to-orbit bijection.

use crate::affine::{AffineWeyl, ExtAffineElement};
use crate::error::CoreError;
use crate::partitions::Partition;
use crate::root_data::{BuiltinTag, Weight, WeylElement};

/// An affine permutation in window notation: the bijection
/// `i ↦ window[i]` extended by `w(i + n) = w(i) + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePermutation {
    pub n: usize,
    pub window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self, CoreError> {
        if window.len() != n || n == 0 {
            return Err(CoreError::InvalidWindow(format!(
                "window length {} does not match n = {n}",
                window.len()
            )));
        }
        let mut seen = vec![false; n];
        for &w in &window {
            let r = (w - 1).rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(CoreError::InvalidWindow(format!(
                    "residues of {window:?} mod {n} are not a permutation"
                )));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { n, window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// Evaluate at any integer via periodicity.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let q = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n) as usize;
        self.window[r] + q * n
    }

    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        assert_eq!(self.n, other.n);
        AffinePermutation {
            n: self.n,
            window: (1..=self.n as i64).map(|i| self.eval(other.eval(i))).collect(),
        }
    }

    pub fn inverse(&self) -> AffinePermutation {
        let n = self.n as i64;
        let mut window = vec![0i64; self.n];
        for (idx, &w) in self.window.iter().enumerate() {
            let i = idx as i64 + 1;
            // w(i) = w, so w^{-1}(w) = i; normalize the column to 1..=n
            let r = (w - 1).rem_euclid(n) as usize;
            let shift = (w - 1).div_euclid(n);
            window[r] = i - shift * n;
        }
        AffinePermutation { n: self.n, window }
    }

    /// Total displacement; equals `n * Σ λ_i` for the image of `v t_λ`.
    pub fn displacement(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(i, &w)| w - (i as i64 + 1))
            .sum()
    }
}

/// The standard isomorphism `W ⋉ Z^n ≅` extended affine symmetric group:
/// `v t_λ ↦ (i ↦ v(i) + n λ_i)`.
pub fn to_affine_permutation(
    aff: &AffineWeyl,
    w: &ExtAffineElement,
) -> Result<AffinePermutation, CoreError> {
    let datum = aff.datum();
    let BuiltinTag::Gl(n) = datum.tag else {
        return Err(CoreError::NotGl);
    };
    let perm = weyl_to_permutation(datum.lattice_dim, &w.finite);
    let window: Vec<i64> = (0..n)
        .map(|i| perm[i] as i64 + 1 + n as i64 * w.trans.0[i])
        .collect();
    AffinePermutation::new(n, window)
}

/// Extract `v(i)` (0-based) from the cached action on `Z^n`.
fn weyl_to_permutation(n: usize, v: &WeylElement) -> Vec<usize> {
    (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            let im = v.act(&Weight(e));
            im.0.iter().position(|&x| x == 1).expect("permutation matrix")
        })
        .collect()
}

// --- the matrix-ball forward pass ---------------------------------------

type Ball = (i64, i64); // (row, column)

fn normalize(n: i64, b: Ball) -> Ball {
    let shift = (b.0 - 1).div_euclid(n);
    (b.0 - shift * n, b.1 - shift * n)
}

fn lt(a: Ball, b: Ball) -> bool {
    a.0 < b.0 && a.1 < b.1
}

/// Longest strictly increasing path from `b` to `b + (n, n)` through ball
/// copies; returns (edge count, the intermediate classes in path order with
/// the concrete coordinates used).
fn best_loop(n: i64, balls: &[Ball], start: usize) -> (usize, Vec<(usize, Ball)>) {
    let b0 = balls[start];
    let goal = (b0.0 + n, b0.1 + n);
    // candidate nodes: the unique copy of each class with row in (b0.row, b0.row + n)
    let mut nodes: Vec<(usize, Ball)> = Vec::new();
    for (j, &bj) in balls.iter().enumerate() {
        let shift = (b0.0 - bj.0).div_euclid(n) + 1;
        let copy = (bj.0 + shift * n, bj.1 + shift * n);
        if copy.0 > b0.0 && copy.0 < goal.0 && lt(b0, copy) && lt(copy, goal) {
            nodes.push((j, copy));
        }
    }
    nodes.sort_by_key(|&(_, c)| c);
    // longest path DP; dist[i] = best edges from b0 to node i
    let mut dist: Vec<Option<usize>> = vec![None; nodes.len()];
    let mut back: Vec<Option<usize>> = vec![None; nodes.len()];
    for i in 0..nodes.len() {
        let mut best: Option<(usize, Option<usize>)> = Some((1, None)); // straight from b0
        for j in 0..i {
            if lt(nodes[j].1, nodes[i].1) {
                if let Some(dj) = dist[j] {
                    let cand = dj + 1;
                    if best.map_or(true, |(b, _)| cand > b) {
                        best = Some((cand, Some(j)));
                    }
                }
            }
        }
        if let Some((d, bk)) = best {
            dist[i] = Some(d);
            back[i] = bk;
        }
    }
    // close the loop at the goal
    let mut best_len = 1usize; // b0 -> b0 + delta directly
    let mut best_end: Option<usize> = None;
    for i in 0..nodes.len() {
        if let Some(di) = dist[i] {
            if lt(nodes[i].1, goal) && di + 1 > best_len {
                best_len = di + 1;
                best_end = Some(i);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = best_end;
    while let Some(i) = cur {
        path.push(nodes[i]);
        cur = back[i];
    }
    path.reverse();
    (best_len, path)
}

/// Maximal density of a shift-invariant chain, plus one realizing channel
/// (class indices in chain order starting from a canonical ball).
fn width_and_channel(n: i64, balls: &[Ball]) -> (usize, Vec<(usize, Ball)>) {
    let mut best: Option<(usize, usize)> = None; // (density, start)
    for start in 0..balls.len() {
        let (len, _) = best_loop(n, balls, start);
        if best.map_or(true, |(b, _)| len > b) {
            best = Some((len, start));
        }
    }
    let (density, start) = best.expect("nonempty ball set");
    let (_, path) = best_loop(n, balls, start);
    let mut channel = vec![(start, balls[start])];
    channel.extend(path);
    (density, channel)
}

/// Channel-relative proper numbering of the ball classes, as the least
/// solution of the longest-path constraints
/// `d(x) >= d(y) + j_max(y, x) * k + 1` with the channel values pinned.
fn channel_numbering(n: i64, balls: &[Ball], channel: &[(usize, Ball)], k: usize) -> Vec<i64> {
    let m = balls.len();
    let neg_inf = i64::MIN / 4;
    let mut d = vec![neg_inf; m];
    for (pos, &(class, copy)) in channel.iter().enumerate() {
        // copy = rep + j*delta, so d(rep) = pos - j*k
        let j = (copy.0 - balls[class].0) / n;
        let pinned = pos as i64 - j * k as i64;
        assert!(d[class] == neg_inf || d[class] == pinned, "channel self-consistency");
        d[class] = pinned;
    }
    // constraint edges
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for (y, &by) in balls.iter().enumerate() {
        for (x, &bx) in balls.iter().enumerate() {
            let jr = (bx.0 - by.0 - 1).div_euclid(n);
            let jc = (bx.1 - by.1 - 1).div_euclid(n);
            let jmax = jr.min(jc);
            edges.push((y, x, jmax * k as i64 + 1));
        }
    }
    // Bellman-Ford longest paths from the pinned channel values
    for round in 0..=m + 1 {
        let mut changed = false;
        for &(y, x, w) in &edges {
            if d[y] > neg_inf / 2 && d[y] + w > d[x] {
                d[x] = d[y] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        assert!(round <= m, "positive cycle in numbering constraints (width too small)");
    }
    assert!(d.iter().all(|&v| v > neg_inf / 2), "every ball must be numbered");
    // the pinned channel values must be stable
    for (pos, &(class, copy)) in channel.iter().enumerate() {
        let j = (copy.0 - balls[class].0) / n;
        assert_eq!(d[class], pos as i64 - j * k as i64, "channel numbering violated");
    }
    d
}

/// One forward pass: extract the zigzags of the numbering and return the
/// derived ball set.
fn derived_balls(n: i64, balls: &[Ball], d: &[i64], k: usize) -> Vec<Ball> {
    let mut out = Vec::new();
    let mut residues_seen = Vec::new();
    for class in 0..balls.len() {
        let residue = d[class].rem_euclid(k as i64);
        if residues_seen.contains(&residue) {
            continue;
        }
        residues_seen.push(residue);
        // one zigzag: a common level for all classes with this residue
        let members: Vec<usize> = (0..balls.len())
            .filter(|&c| d[c].rem_euclid(k as i64) == residue)
            .collect();
        let target = members.iter().map(|&c| d[c]).max().unwrap();
        let mut zigzag: Vec<Ball> = members
            .iter()
            .map(|&c| {
                let j = (target - d[c]) / k as i64;
                (balls[c].0 + j * n, balls[c].1 + j * n)
            })
            .collect();
        zigzag.sort();
        for w in zigzag.windows(2) {
            assert!(
                w[0].0 < w[1].0 && w[0].1 > w[1].1,
                "zigzag must be an antichain: {zigzag:?}"
            );
        }
        for w in zigzag.windows(2) {
            // back corner-post: row of the later ball, column of the earlier
            out.push(normalize(n, (w[1].0, w[0].1)));
        }
    }
    out.sort();
    out
}

/// The two-sided cell shape of an affine permutation.
pub fn ambc_shape(w: &AffinePermutation) -> Partition {
    let n = w.n as i64;
    let mut balls: Vec<Ball> = w
        .window
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64 + 1, c))
        .collect();
    let mut parts: Vec<u32> = Vec::new();
    while !balls.is_empty() {
        let (k, channel) = width_and_channel(n, &balls);
        let d = channel_numbering(n, &balls, &channel, k);
        let next = derived_balls(n, &balls, &d, k);
        assert_eq!(next.len(), balls.len() - k, "each zigzag drops one ball");
        if let Some(&last) = parts.last() {
            assert!(k as u32 <= last, "row lengths must weakly decrease");
        }
        parts.push(k as u32);
        balls = next;
    }
    let shape = Partition::new(parts).expect("weakly decreasing by construction");
    assert_eq!(shape.size() as usize, w.n);
    shape
}

/// Orientation of the bijection between cell shapes and nilpotent orbits,
/// pinned at runtime by the two anchors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Identity,
    Transpose,
}

/// Cell computations for a fixed `GL(n)`, with the orbit orientation
/// calibrated on construction.
pub struct CellEngine {
    aff: AffineWeyl,
    n: usize,
    orientation: Orientation,
}

impl CellEngine {
    /// Calibration anchors: `λ = 0` must predict the regular orbit `(n)` and
    /// a deep antidominant regular `λ` must predict the zero orbit `(1^n)`.
    pub fn new(aff: AffineWeyl) -> Result<Self, CoreError> {
        let BuiltinTag::Gl(n) = aff.datum().tag else {
            return Err(CoreError::NotGl);
        };
        let shape_zero = raw_shape(&aff, &Weight::zero(n))?;
        let deep = Weight((0..n).map(|i| -4 * (n as i64 - 1 - i as i64)).collect());
        let shape_deep = raw_shape(&aff, &deep)?;
        let orientation = if shape_zero == Partition::row(n as u32)
            && shape_deep == Partition::column(n as u32)
        {
            Orientation::Identity
        } else if shape_zero == Partition::column(n as u32)
            && shape_deep == Partition::row(n as u32)
        {
            Orientation::Transpose
        } else {
            return Err(CoreError::Calibration(format!(
                "cell anchors inconsistent: shape(0) = {shape_zero}, shape(deep) = {shape_deep}"
            )));
        };
        Ok(CellEngine { aff, n, orientation })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn affine(&self) -> &AffineWeyl {
        &self.aff
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The partition labelling the nilpotent orbit whose antispherical cell
    /// contains `w_λ`.
    pub fn orbit_of_weight(&self, lambda: &Weight) -> Result<Partition, CoreError> {
        let shape = raw_shape(&self.aff, lambda)?;
        Ok(match self.orientation {
            Orientation::Identity => shape,
            Orientation::Transpose => shape.transpose(),
        })
    }
}

fn raw_shape(aff: &AffineWeyl, lambda: &Weight) -> Result<Partition, CoreError> {
    let w = aff.min_coset_rep(lambda);
    Ok(ambc_shape(&to_affine_permutation(aff, &w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;
    use crate::root_data::RootDatum;

    fn gl(n: usize) -> AffineWeyl {
        AffineWeyl::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn window_construction() {
        let aff = gl(3);
        assert_eq!(
            to_affine_permutation(&aff, &aff.identity()).unwrap(),
            AffinePermutation::identity(3)
        );
        let s1 = aff.simple_reflections()[0].clone();
        assert_eq!(
            to_affine_permutation(&aff, &s1).unwrap().window,
            vec![2, 1, 3]
        );
        let aff2 = gl(2);
        let t = aff2.translation(&Weight(vec![1, 0]));
        let w = to_affine_permutation(&aff2, &t).unwrap();
        assert_eq!(w.window, vec![3, 2]);
        assert_eq!(w.displacement(), 2); // n * sum(lambda)
        // non-GL rejected
        let sl = AffineWeyl::new(RootDatum::sl(2).unwrap());
        assert!(matches!(
            to_affine_permutation(&sl, &sl.identity()),
            Err(CoreError::NotGl)
        ));
    }

    #[test]
    fn window_map_is_a_homomorphism() {
        let aff = gl(3);
        let weyl = crate::root_data::enumerate_weyl(aff.datum());
        let mut elems = Vec::new();
        for v in weyl.iter().take(4) {
            for a in -1..=1 {
                for b in -1..=1 {
                    elems.push(aff.from_parts(v.clone(), Weight(vec![a, b, a - b])));
                }
            }
        }
        for u in elems.iter().step_by(3) {
            for w in elems.iter().step_by(4) {
                let lhs = to_affine_permutation(&aff, &aff.mul(u, w)).unwrap();
                let rhs = to_affine_permutation(&aff, u)
                    .unwrap()
                    .compose(&to_affine_permutation(&aff, w).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn shape_matches_rsk_on_finite_permutations() {
        for n in 2..=4usize {
            let items: Vec<i64> = (1..=n as i64).collect();
            for p in oracles::permutations(&items) {
                let w = AffinePermutation::new(n, p.clone()).unwrap();
                assert_eq!(ambc_shape(&w), oracles::rsk_shape(&p), "window {p:?}");
            }
        }
    }

    #[test]
    fn shape_matches_chain_family_oracle_on_affine_windows() {
        // deterministic sample of genuine affine windows
        let mut state = 0xdeadbeefdead1234u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for n in 2..=4usize {
            let items: Vec<i64> = (1..=n as i64).collect();
            let perms = oracles::permutations(&items);
            for _ in 0..60 {
                let p = &perms[(next() % perms.len() as u64) as usize];
                let window: Vec<i64> = p
                    .iter()
                    .map(|&x| x + n as i64 * ((next() % 5) as i64 - 2))
                    .collect();
                let w = AffinePermutation::new(n, window.clone()).unwrap();
                assert_eq!(
                    ambc_shape(&w),
                    oracles::shape_by_chain_families(n, &window),
                    "window {window:?}"
                );
            }
        }
    }

    #[test]
    fn shape_invariant_under_inverse() {
        let mut state = 0x12345678u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for n in 2..=4usize {
            let items: Vec<i64> = (1..=n as i64).collect();
            let perms = oracles::permutations(&items);
            for _ in 0..40 {
                let p = &perms[(next() % perms.len() as u64) as usize];
                let window: Vec<i64> = p
                    .iter()
                    .map(|&x| x + n as i64 * ((next() % (4 * n as u64 + 1)) as i64 - 2 * n as i64))
                    .collect();
                let w = AffinePermutation::new(n, window).unwrap();
                assert_eq!(ambc_shape(&w), ambc_shape(&w.inverse()));
            }
        }
    }

    #[test]
    fn shape_stable_under_omega_multiplication() {
        // the shift permutation generates the length-zero subgroup
        for n in 2..=3usize {
            let shift = AffinePermutation::new(n, (2..=n as i64 + 1).collect()).unwrap();
            let items: Vec<i64> = (1..=n as i64).collect();
            for p in oracles::permutations(&items) {
                for off in -1..=1i64 {
                    let window: Vec<i64> = p.iter().map(|&x| x + n as i64 * off).collect();
                    let Ok(w) = AffinePermutation::new(n, window) else { continue };
                    let s = ambc_shape(&w);
                    assert_eq!(ambc_shape(&shift.compose(&w)), s);
                    assert_eq!(ambc_shape(&w.compose(&shift)), s);
                }
            }
        }
    }

    #[test]
    fn deep_translation_anchor() {
        for n in 2..=3usize {
            let aff = gl(n);
            let w0 = crate::root_data::longest_element(aff.datum());
            for k in 1..=4i64 {
                let mut lam = vec![0i64; n];
                lam[0] = k;
                lam[n - 1] = -k;
                let w = aff.mul(
                    &aff.from_parts(w0.clone(), Weight::zero(n)),
                    &aff.translation(&Weight(lam)),
                );
                let shape = ambc_shape(&to_affine_permutation(&aff, &w).unwrap());
                assert_eq!(shape, Partition::column(n as u32), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn orbit_of_weight_anchors() {
        let engine = CellEngine::new(gl(2)).unwrap();
        assert_eq!(engine.orientation(), Orientation::Identity);
        assert_eq!(
            engine.orbit_of_weight(&Weight(vec![0, 0])).unwrap(),
            Partition::row(2)
        );
        assert_eq!(
            engine.orbit_of_weight(&Weight(vec![-8, 0])).unwrap(),
            Partition::column(2)
        );
        assert_eq!(
            engine.orbit_of_weight(&Weight(vec![-1, 0])).unwrap(),
            Partition::row(2),
            "length-zero w_lambda lies in the a-value-0 cell"
        );
        let engine3 = CellEngine::new(gl(3)).unwrap();
        assert_eq!(
            engine3.orbit_of_weight(&Weight(vec![0, 0, 0])).unwrap(),
            Partition::row(3)
        );
        assert_eq!(
            engine3.orbit_of_weight(&Weight(vec![-12, -6, 0])).unwrap(),
            Partition::column(3)
        );
    }
}
