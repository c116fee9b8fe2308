//! Independent reference implementations used by the test and acceptance
//! suites to cross-check the production code paths.  Nothing here is used
//! by the main algorithms.

use std::collections::HashSet;

use crate::affine::{AffineWeyl, ExtAffineElement};
use crate::partitions::Partition;
use crate::root_data::{enumerate_weyl, Weight};

/// Length as the number of affine hyperplanes `<x, α^∨> = k` separating the
/// fundamental alcove from its image.  Works with an exact rational interior
/// point, scaled to integers.
pub fn length_by_separating_hyperplanes(aff: &AffineWeyl, w: &ExtAffineElement) -> usize {
    let datum = aff.datum();
    let rho_hat = datum.rho();
    let denom: i64 = 1 + datum
        .positive_roots()
        .iter()
        .map(|r| datum.pairing(&r.coroot, &rho_hat).unwrap())
        .max()
        .unwrap_or(0);
    // x0 = rho_hat / denom is interior to the fundamental alcove;
    // w(x0) = v(rho_hat + denom * lambda) / denom.
    let image_num = w.finite.act(&rho_hat.add(&w.trans.scale(denom)));
    let mut count = 0usize;
    for root in datum.positive_roots() {
        let a = datum.pairing(&root.coroot, &rho_hat).unwrap();
        let b = datum.pairing(&root.coroot, &image_num).unwrap();
        debug_assert!(a.rem_euclid(denom) != 0 && b.rem_euclid(denom) != 0);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        count += (hi.div_euclid(denom) - lo.div_euclid(denom)) as usize;
    }
    count
}

/// Bruhat order by the subword property: fix one reduced word for `w`'s
/// Coxeter part; `u <= w` iff some subword multiplies out to `u`'s Coxeter
/// part.
pub fn bruhat_by_subword(aff: &AffineWeyl, u: &ExtAffineElement, w: &ExtAffineElement) -> bool {
    if !aff.same_component(u, w) {
        return false;
    }
    let nf = aff.coxeter_normal_form(w);
    let target = aff.mul(u, &aff.inv(&nf.omega));
    let gens = aff.simple_reflections();
    let mut reach: HashSet<ExtAffineElement> = HashSet::new();
    reach.insert(aff.identity());
    for &letter in &nf.word {
        let step: Vec<ExtAffineElement> = reach
            .iter()
            .map(|g| aff.mul(g, &gens[letter]))
            .collect();
        reach.extend(step);
    }
    reach.contains(&target)
}

/// All elements of the extended group with length at most `max_len` whose
/// translation coordinates fit in the implied box.
pub fn enumerate_by_length(aff: &AffineWeyl, max_len: usize) -> Vec<ExtAffineElement> {
    let datum = aff.datum();
    let bound = max_len as i64 + 1;
    let weyl = enumerate_weyl(datum);
    let dim = datum.lattice_dim;
    let mut coords = vec![0i64; dim];
    let mut out = Vec::new();
    loop {
        let lam = Weight(coords.clone());
        for v in &weyl {
            let w = aff.from_parts(v.clone(), lam.clone());
            if aff.length(&w) <= max_len {
                out.push(w);
            }
        }
        // odometer over the box [-bound, bound]^dim
        let mut i = 0;
        loop {
            if i == dim {
                return out;
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
}

/// Classical Robinson-Schensted shape by row insertion.
pub fn rsk_shape(word: &[i64]) -> Partition {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for &x in word {
        let mut cur = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > cur) {
                Some(j) => {
                    std::mem::swap(&mut row[j], &mut cur);
                }
                None => {
                    row.push(cur);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![cur]);
        }
    }
    Partition::from_unsorted(rows.iter().map(|r| r.len() as u32).collect())
}

/// Greene-Kleitman style oracle for affine cell shapes: the k-th partial sum
/// of the shape is the maximal total density of k pairwise-disjoint
/// shift-invariant increasing chains of balls.  Exponential search; small n
/// only.
pub fn shape_by_chain_families(n: usize, window: &[i64]) -> Partition {
    let balls: Vec<(i64, i64)> = (0..n).map(|i| (i as i64 + 1, window[i])).collect();
    let nn = n as i64;
    // enumerate shift-invariant chains as sets of ball classes with a
    // density; a chain is a path b -> b + (n, n)
    let mut chains: Vec<(u64, usize)> = Vec::new(); // (bitmask of classes, density)
    for (start, &b0) in balls.iter().enumerate() {
        // depth-first over strictly increasing paths towards b0 + (n, n)
        let goal = (b0.0 + nn, b0.1 + nn);
        let mut stack: Vec<(i64, i64, u64)> = vec![(b0.0, b0.1, 1u64 << start)];
        while let Some((r, c, mask)) = stack.pop() {
            // the head can always close the loop to b0 + (n, n), so every
            // prefix is itself a shift-invariant chain
            if goal.0 > r && goal.1 > c {
                chains.push((mask, mask.count_ones() as usize));
            }
            for (j, &bj) in balls.iter().enumerate() {
                // the unique copy of class j with row in (r, r + n]
                let shift = (r - bj.0).div_euclid(nn) + 1;
                let (rr, cc) = (bj.0 + shift * nn, bj.1 + shift * nn);
                if rr <= r || rr >= goal.0 {
                    continue;
                }
                if cc > c && cc < goal.1 && mask & (1 << j) == 0 {
                    stack.push((rr, cc, mask | (1 << j)));
                }
            }
        }
    }
    chains.sort();
    chains.dedup();
    // best total density using exactly k disjoint chains, by DP over masks
    let full = 1u64 << n;
    let mut best = vec![vec![0usize; n + 1]; full as usize];
    for k in 1..=n {
        for mask in 0..full {
            let mut b = best[mask as usize][k - 1];
            for &(cm, dens) in &chains {
                if cm & mask == cm {
                    let rest = mask & !cm;
                    b = b.max(best[rest as usize][k - 1] + dens);
                }
            }
            best[mask as usize][k] = b;
        }
    }
    let sums: Vec<usize> = (0..=n).map(|k| best[(full - 1) as usize][k]).collect();
    let mut parts = Vec::new();
    for k in 1..=n {
        let diff = sums[k] - sums[k - 1];
        if diff > 0 {
            parts.push(diff as u32);
        }
    }
    Partition::from_unsorted(parts)
}

/// All permutations of the given items, in a deterministic order.
pub fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rsk_small() {
        assert_eq!(rsk_shape(&[1, 2, 3]), Partition::row(3));
        assert_eq!(rsk_shape(&[2, 1, 3]), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(rsk_shape(&[3, 2, 1]), Partition::column(3));
        assert_eq!(rsk_shape(&[4, 2, 3, 1]), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(rsk_shape(&[3, 4, 1, 2]), Partition::new(vec![2, 2]).unwrap());
    }

    #[test]
    fn chain_family_oracle_matches_rsk_on_finite_windows() {
        // finite permutations: the chain-family invariant is Greene's theorem
        let perms3 = [[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 1, 2], [2, 3, 1], [3, 2, 1]];
        for p in perms3 {
            assert_eq!(shape_by_chain_families(3, &p), rsk_shape(&p), "{p:?}");
        }
        let p4: Vec<Vec<i64>> = permutations(&[1, 2, 3, 4]);
        for p in p4 {
            assert_eq!(shape_by_chain_families(4, &p), rsk_shape(&p), "{p:?}");
        }
    }
}
