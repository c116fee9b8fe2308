//! Alcove geometry for the p-dilated dot action.
//!
//! Throughout, alcove positions are described in the shifted coordinates
//! `y = x + ρ`: the fundamental alcove is `{0 < <y, α^∨> < p}` and the dot
//! action of `w = v t_ν` becomes `y ↦ v(y + pν)`.
//!
//! Lower closures are half-open: the alcove with wall offsets `n_α` owns
//! `{n_α p <= <y, α^∨> < (n_α + 1) p}`.  With this convention the lower
//! closures tile the weight lattice, and the offsets of the alcove owning a
//! weight are plain floor divisions.

use std::collections::BTreeMap;

use crate::affine::{AffineWeyl, ExtAffineElement};
use crate::error::CoreError;
use crate::root_data::{root_is_positive, Weight};

/// An alcove `w ·_p C_p` together with its wall offsets `n_α`.
#[derive(Clone, Debug)]
pub struct AlcovePosition {
    pub element: ExtAffineElement,
    /// Offsets indexed like `datum.positive_roots()`; the offsets do not
    /// depend on p.
    pub wall_offsets: Vec<i64>,
}

/// `w ·_p λ = v(λ + ρ + pν) − ρ` for `w = v t_ν`.
pub fn dot_act_p(aff: &AffineWeyl, w: &ExtAffineElement, lambda: &Weight, p: i64) -> Weight {
    assert!(p >= 2, "p must be at least 2");
    let rho = aff.datum().rho();
    let inner = lambda.add(&rho).add(&w.trans.scale(p));
    w.finite.act(&inner).sub(&rho)
}

/// Wall offsets of the open alcove `w ·_p C_p`:
/// `n_α = <ν, β^∨>` if `β = v^{-1}(α)` is positive, `n_α = <ν, β^∨> − 1`
/// otherwise.  Independent of p.
pub fn wall_offsets(aff: &AffineWeyl, w: &ExtAffineElement) -> Vec<i64> {
    let datum = aff.datum();
    let vinv = w.finite.inverse(datum);
    datum
        .positive_roots()
        .iter()
        .map(|root| {
            let beta = vinv.act(&root.weight);
            if root_is_positive(datum, &beta) {
                let coroot = &datum
                    .positive_roots()
                    .iter()
                    .find(|r| r.weight == beta)
                    .expect("image of a root is a root")
                    .coroot;
                datum.pairing(coroot, &w.trans).unwrap()
            } else {
                let neg = beta.neg();
                let coroot = &datum
                    .positive_roots()
                    .iter()
                    .find(|r| r.weight == neg)
                    .expect("image of a root is a root")
                    .coroot;
                -datum.pairing(coroot, &w.trans).unwrap() - 1
            }
        })
        .collect()
}

/// True iff `μ` lies in the half-open lower closure of `w ·_p C_p`.
pub fn lower_closure_contains(aff: &AffineWeyl, w: &ExtAffineElement, mu: &Weight, p: i64) -> bool {
    assert!(p >= 2);
    let datum = aff.datum();
    let y = mu.add(&datum.rho());
    let offsets = wall_offsets(aff, w);
    datum
        .positive_roots()
        .iter()
        .zip(&offsets)
        .all(|(root, &n)| {
            let v = datum.pairing(&root.coroot, &y).unwrap();
            n * p <= v && v < (n + 1) * p
        })
}

/// The unique half-open alcove containing `μ`, as offsets plus a concrete
/// group element realizing them.
pub fn alcove_of(aff: &AffineWeyl, mu: &Weight, p: i64) -> AlcovePosition {
    assert!(p >= 2);
    let datum = aff.datum();
    let y = mu.add(&datum.rho());
    let offsets: Vec<i64> = datum
        .positive_roots()
        .iter()
        .map(|root| datum.pairing(&root.coroot, &y).unwrap().div_euclid(p))
        .collect();

    // Walk the perturbed point y + ε ρ̂ into the fundamental alcove.  The
    // perturbation is handled symbolically: pairings are pairs (A, B)
    // ordered lexicographically.
    let rho_hat = datum.rho();
    let mut a = y.clone();
    let mut b = rho_hat;
    let mut g = aff.identity();
    let highest = datum.component_highest_roots();
    let gens = aff.simple_reflections();
    let mut steps = 0usize;
    loop {
        steps += 1;
        assert!(steps < 100_000, "alcove walk failed to terminate");
        // negative finite wall?
        let mut moved = false;
        for s in 0..datum.rank {
            let pa = datum.simple_pairing(s, &a);
            let pb = datum.simple_pairing(s, &b);
            if (pa, pb) < (0, 0) {
                a = datum.simple_reflect(s, &a);
                b = datum.simple_reflect(s, &b);
                g = aff.mul(&gens[s], &g);
                moved = true;
                break;
            }
        }
        if moved {
            continue;
        }
        // above an affine wall <y, θ^∨> = p?
        for (c, theta) in highest.iter().enumerate() {
            let pa = datum.pairing(&theta.coroot, &a).unwrap();
            let pb = datum.pairing(&theta.coroot, &b).unwrap();
            if (pa, pb) > (p, 0) {
                // reflection in the wall: y ↦ s_θ(y) + pθ
                let r = &gens[datum.rank + c];
                a = r.finite.act(&a).add(&theta.weight.scale(p));
                b = r.finite.act(&b);
                g = aff.mul(r, &g);
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    let element = aff.inv(&g);
    let check = wall_offsets(aff, &element);
    debug_assert_eq!(check, offsets, "walk element must realize the floor offsets");
    AlcovePosition {
        element,
        wall_offsets: offsets,
    }
}

/// A block label: an antidominant weight `λ` whose alcove's lower closure
/// contains `μ`, together with `w_λ` and whether `μ = w_λ ·_p 0` exactly.
#[derive(Clone, Debug)]
pub struct BlockLabel {
    pub lambda: Weight,
    pub w_lambda: ExtAffineElement,
    pub exact: bool,
}

/// All antidominant `λ` in the coordinate box `[-bound, bound]^dim` whose
/// `w_λ ·_p C_p` lower closure contains `μ`.
pub fn block_labels(
    aff: &AffineWeyl,
    mu: &Weight,
    p: i64,
    bound: i64,
) -> Result<Vec<BlockLabel>, CoreError> {
    assert!(p >= 2);
    let datum = aff.datum();
    let dim = datum.lattice_dim;
    let mut labels = Vec::new();
    let mut coords = vec![-bound; dim];
    'outer: loop {
        let lam = Weight(coords.clone());
        if datum.is_antidominant(&lam) {
            let w = aff.min_coset_rep(&lam);
            if lower_closure_contains(aff, &w, mu, p) {
                let exact = dot_act_p(aff, &w, &Weight::zero(dim), p) == *mu;
                labels.push(BlockLabel {
                    lambda: lam,
                    w_lambda: w,
                    exact,
                });
            }
        }
        let mut i = 0;
        loop {
            if i == dim {
                break 'outer;
            }
            coords[i] += 1;
            if coords[i] > bound {
                coords[i] = -bound;
                i += 1;
            } else {
                break;
            }
        }
    }
    if labels.is_empty() {
        return Err(CoreError::BoxExhausted);
    }
    labels.sort_by_key(|l| l.lambda.0.clone());
    Ok(labels)
}

/// Default search-box bound: alcove offsets of `μ` bound the translations
/// needed.
pub fn default_box_bound(aff: &AffineWeyl, mu: &Weight, p: i64) -> i64 {
    let datum = aff.datum();
    let y = mu.add(&datum.rho());
    let max_pair = datum
        .positive_roots()
        .iter()
        .map(|r| datum.pairing(&r.coroot, &y).unwrap().abs())
        .max()
        .unwrap_or(0);
    max_pair.div_euclid(p) + i64::from(max_pair.rem_euclid(p) != 0) + 1
}

/// Group the offsets with the positive roots for reporting.
pub fn offsets_by_root(aff: &AffineWeyl, pos: &AlcovePosition) -> BTreeMap<Vec<i64>, i64> {
    aff.datum()
        .positive_roots()
        .iter()
        .zip(&pos.wall_offsets)
        .map(|(r, &n)| (r.weight.0.clone(), n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootDatum;

    fn sl2() -> AffineWeyl {
        AffineWeyl::new(RootDatum::sl(2).unwrap())
    }

    #[test]
    fn dot_action_examples() {
        let aff = sl2();
        let lam = Weight(vec![3]);
        assert_eq!(dot_act_p(&aff, &aff.identity(), &lam, 5), lam);

        let s = aff.simple_reflections()[0].clone();
        let st1 = aff.mul(&s, &aff.translation(&Weight(vec![-1])));
        assert_eq!(dot_act_p(&aff, &st1, &Weight(vec![0]), 5), Weight(vec![3]));

        let st2 = aff.mul(&s, &aff.translation(&Weight(vec![-2])));
        assert_eq!(dot_act_p(&aff, &st2, &Weight(vec![0]), 5), Weight(vec![8]));
    }

    #[test]
    fn dot_action_is_a_group_action() {
        let aff = AffineWeyl::new(RootDatum::gl(2).unwrap());
        let weyl = crate::root_data::enumerate_weyl(aff.datum());
        let mut elems = Vec::new();
        for v in &weyl {
            for a in -2..=2 {
                for b in -2..=2 {
                    elems.push(aff.from_parts(v.clone(), Weight(vec![a, b])));
                }
            }
        }
        let lam = Weight(vec![1, -1]);
        for w in elems.iter().step_by(3) {
            for w2 in elems.iter().step_by(5) {
                let lhs = dot_act_p(&aff, &aff.mul(w, w2), &lam, 5);
                let rhs = dot_act_p(&aff, w, &dot_act_p(&aff, w2, &lam, 5), 5);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn alcove_of_examples() {
        let aff = sl2();
        let pos = alcove_of(&aff, &Weight(vec![2]), 5);
        assert_eq!(pos.wall_offsets, vec![0]);

        let pos = alcove_of(&aff, &Weight(vec![4]), 5);
        assert_eq!(pos.wall_offsets, vec![1], "wall point is assigned upward");

        let pos = alcove_of(&aff, &Weight(vec![-1]), 5);
        assert_eq!(pos.wall_offsets, vec![0], "-1 + 1 = 0 lies in the lower closure");
    }

    #[test]
    fn lower_closure_examples() {
        let aff = sl2();
        let e = aff.identity();
        assert!(lower_closure_contains(&aff, &e, &Weight(vec![0]), 5));
        assert!(!lower_closure_contains(&aff, &e, &Weight(vec![4]), 5));
        let s = aff.simple_reflections()[0].clone();
        let w = aff.mul(&s, &aff.translation(&Weight(vec![-2])));
        assert!(lower_closure_contains(&aff, &w, &Weight(vec![4]), 5));
    }

    #[test]
    fn tiling_each_weight_in_exactly_one_alcove() {
        // deterministic pseudo-random weights; uniqueness of the offset
        // vector is floor division, so we check that the constructed element
        // realizes it and that containment pins exactly that offset vector
        for (datum, dims) in [
            (RootDatum::sl(2).unwrap(), 1usize),
            (RootDatum::gl(2).unwrap(), 2),
            (RootDatum::sl(3).unwrap(), 2),
            (RootDatum::gl(3).unwrap(), 3),
        ] {
            let aff = AffineWeyl::new(datum);
            for p in [5i64, 7] {
                let mut state = 0x9e3779b97f4a7c15u64;
                for _ in 0..125 {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let mut coords = Vec::new();
                    for k in 0..dims {
                        coords.push((((state >> (8 * k)) & 0xff) as i64) - 128);
                    }
                    let mu = Weight(coords);
                    let pos = alcove_of(&aff, &mu, p);
                    assert!(
                        lower_closure_contains(&aff, &pos.element, &mu, p),
                        "mu {mu:?} must lie in its own alcove"
                    );
                }
            }
        }
    }

    #[test]
    fn block_label_examples() {
        let aff = sl2();
        let labels = block_labels(&aff, &Weight(vec![0]), 5, 2).unwrap();
        assert!(labels
            .iter()
            .any(|l| l.lambda == Weight(vec![0]) && l.exact && l.w_lambda == aff.identity()));

        let labels = block_labels(&aff, &Weight(vec![4]), 5, 2).unwrap();
        assert!(labels.iter().any(|l| l.lambda == Weight(vec![-2])));

        let labels = block_labels(&aff, &Weight(vec![3]), 5, 2).unwrap();
        let l = labels
            .iter()
            .find(|l| l.lambda == Weight(vec![-1]))
            .expect("lambda = -omega labels mu = 3");
        assert!(l.exact, "3 = w_(-omega) ._5 0 exactly");
    }

    #[test]
    fn box_exhaustion_is_an_error() {
        let aff = sl2();
        // mu = 14 needs offset 3 alcoves; bound 0 cannot reach them
        let err = block_labels(&aff, &Weight(vec![14]), 5, 0);
        assert!(matches!(err, Err(CoreError::BoxExhausted)));
    }
}
