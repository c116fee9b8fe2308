//! The extended affine Weyl group `W_aff = W ⋉ X`.
//!
//! Elements are kept in the normal form `w = v t_λ`.  The group acts on
//! `X ⊗ R` by `(v t_λ)(x) = v(x + λ)`, which fixes the multiplication rule
//! `(v t_λ)(v' t_μ) = (v v') t_{v'^{-1} λ + μ}`.
//!
//! Lengths are computed in closed form by the Iwahori-Matsumoto sum; the
//! sign convention inside the sum is the one that agrees with the
//! separating-hyperplane count for this action (see `oracles`).

use std::collections::HashMap;
use std::sync::Mutex;

use crate::root_data::{
    longest_element, root_is_positive, RootDatum, Weight, WeylElement,
};

/// `w = v t_λ` in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtAffineElement {
    pub finite: WeylElement,
    pub trans: Weight,
}

impl std::fmt::Debug for ExtAffineElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}*t{}", self.finite, self.trans)
    }
}

/// Reduced word in the affine simple reflections times a length-zero
/// element.  Letters `0..rank` are the finite simple reflections; letters
/// `rank + c` are the affine reflections in the highest root of the `c`-th
/// irreducible component.
#[derive(Clone, Debug)]
pub struct CoxeterNormalForm {
    pub word: Vec<usize>,
    pub omega: ExtAffineElement,
}

/// Context for affine-Weyl computations: the datum, the affine simple
/// reflections, and an internally synchronized Bruhat memo.
pub struct AffineWeyl {
    datum: RootDatum,
    w0: WeylElement,
    gens: Vec<ExtAffineElement>,
    bruhat_memo: Mutex<HashMap<(ExtAffineElement, ExtAffineElement), bool>>,
}

impl AffineWeyl {
    pub fn new(datum: RootDatum) -> Self {
        let w0 = longest_element(&datum);
        let mut gens: Vec<ExtAffineElement> = (0..datum.rank)
            .map(|s| ExtAffineElement {
                finite: WeylElement::simple(&datum, s),
                trans: Weight::zero(datum.lattice_dim),
            })
            .collect();
        for theta in datum.component_highest_roots() {
            // reflection in the hyperplane <x, theta^vee> = 1 is
            // s_theta t_{-theta} for the action (v t_l)(x) = v(x + l)
            let s_theta = reflection_in_root(&datum, &theta.weight);
            gens.push(ExtAffineElement {
                finite: s_theta,
                trans: theta.weight.neg(),
            });
        }
        AffineWeyl {
            datum,
            w0,
            gens,
            bruhat_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    /// Affine simple reflections: finite simples first, then one reflection
    /// per irreducible component.
    pub fn simple_reflections(&self) -> &[ExtAffineElement] {
        &self.gens
    }

    pub fn identity(&self) -> ExtAffineElement {
        ExtAffineElement {
            finite: WeylElement::identity(&self.datum),
            trans: Weight::zero(self.datum.lattice_dim),
        }
    }

    pub fn translation(&self, lambda: &Weight) -> ExtAffineElement {
        ExtAffineElement {
            finite: WeylElement::identity(&self.datum),
            trans: lambda.clone(),
        }
    }

    pub fn from_parts(&self, finite: WeylElement, trans: Weight) -> ExtAffineElement {
        ExtAffineElement { finite, trans }
    }

    /// `(v t_λ)(v' t_μ) = (v v') t_{v'^{-1} λ + μ}`.
    pub fn mul(&self, a: &ExtAffineElement, b: &ExtAffineElement) -> ExtAffineElement {
        let vinv = b.finite.inverse(&self.datum);
        ExtAffineElement {
            finite: a.finite.mul(&self.datum, &b.finite),
            trans: vinv.act(&a.trans).add(&b.trans),
        }
    }

    /// `(v t_λ)^{-1} = v^{-1} t_{-v λ}`.
    pub fn inv(&self, a: &ExtAffineElement) -> ExtAffineElement {
        ExtAffineElement {
            finite: a.finite.inverse(&self.datum),
            trans: a.finite.act(&a.trans).neg(),
        }
    }

    /// Iwahori-Matsumoto length of `v t_λ`:
    /// sum over positive roots of `|<λ,α^∨>|` when `v(α) > 0` and
    /// `|<λ,α^∨> + 1|` when `v(α) < 0`.
    pub fn length(&self, w: &ExtAffineElement) -> usize {
        let mut total = 0i64;
        for root in self.datum.positive_roots() {
            let pair = self
                .datum
                .pairing(&root.coroot, &w.trans)
                .expect("weight on datum lattice");
            let image = w.finite.act(&root.weight);
            if root_is_positive(&self.datum, &image) {
                total += pair.abs();
            } else {
                total += (pair + 1).abs();
            }
        }
        total as usize
    }

    /// Reduced word times the length-zero remainder; evaluating
    /// `word . omega` reproduces `w`.
    pub fn coxeter_normal_form(&self, w: &ExtAffineElement) -> CoxeterNormalForm {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let mut found = false;
            for (i, s) in self.gens.iter().enumerate() {
                let sw = self.mul(s, &cur);
                let l2 = self.length(&sw);
                if l2 < len {
                    word.push(i);
                    cur = sw;
                    len = l2;
                    found = true;
                    break;
                }
            }
            assert!(found, "positive-length element must have a left descent");
        }
        CoxeterNormalForm { word, omega: cur }
    }

    /// Evaluate a normal form back to a group element.
    pub fn evaluate_normal_form(&self, nf: &CoxeterNormalForm) -> ExtAffineElement {
        let mut acc = nf.omega.clone();
        for &i in nf.word.iter().rev() {
            acc = self.mul(&self.gens[i], &acc);
        }
        acc
    }

    /// Two elements are Bruhat-comparable only within the same Ω-component,
    /// i.e. when they differ by an element of the Coxeter part `W ⋉ ZΦ`.
    pub fn same_component(&self, a: &ExtAffineElement, b: &ExtAffineElement) -> bool {
        self.in_root_lattice(&a.trans.sub(&b.trans))
    }

    fn in_root_lattice(&self, weight: &Weight) -> bool {
        // Solve weight = sum c_t alpha_t over the rationals and check
        // integrality; ranks here are small.
        use crate::field::{Rat, Scalar};
        use crate::linalg::{solve, Mat};
        let d = self.datum.lattice_dim;
        let r = self.datum.rank;
        let mut m = Mat::<Rat>::zero(d, r);
        for t in 0..r {
            for i in 0..d {
                m[(i, t)] = Rat::from_int(self.datum.simple_roots[t].0[i]);
            }
        }
        let b: Vec<Rat> = weight.0.iter().map(|&x| Rat::from_int(x)).collect();
        match solve(&m, &b) {
            None => false,
            Some(sol) => {
                // the system may be underdetermined only in degenerate data;
                // verify the candidate exactly and integrally
                let ok_int = sol.iter().all(|c| c.is_integer());
                if !ok_int {
                    return false;
                }
                let mut acc = Weight::zero(d);
                for (t, c) in sol.iter().enumerate() {
                    let ci = c.to_integer();
                    let ci64 = i64::try_from(ci).expect("small coefficient");
                    acc = acc.add(&self.datum.simple_roots[t].scale(ci64));
                }
                acc == *weight
            }
        }
    }

    /// Bruhat order on `W_aff`; distinct Ω-components are incomparable.
    pub fn bruhat_leq(&self, u: &ExtAffineElement, w: &ExtAffineElement) -> bool {
        if u == w {
            return true;
        }
        if !self.same_component(u, w) {
            return false;
        }
        self.bruhat_rec(u.clone(), w.clone())
    }

    fn bruhat_rec(&self, u: ExtAffineElement, w: ExtAffineElement) -> bool {
        if u == w {
            return true;
        }
        let lu = self.length(&u);
        let lw = self.length(&w);
        if lu > lw {
            return false;
        }
        if lw == 0 {
            return u == w;
        }
        if let Some(&hit) = self.bruhat_memo.lock().unwrap().get(&(u.clone(), w.clone())) {
            return hit;
        }
        // lifting property: pick s with l(sw) < l(w)
        let mut result = None;
        for s in &self.gens {
            let sw = self.mul(s, &w);
            if self.length(&sw) < lw {
                let su = self.mul(s, &u);
                let ans = if self.length(&su) < lu {
                    self.bruhat_rec(su, sw)
                } else {
                    self.bruhat_rec(u.clone(), sw)
                };
                result = Some(ans);
                break;
            }
        }
        let ans = result.expect("positive-length element has a descent");
        self.bruhat_memo
            .lock()
            .unwrap()
            .insert((u, w), ans);
        ans
    }

    /// The unique minimal-length element `w_λ` of the coset `W t_λ`.
    pub fn min_coset_rep(&self, lambda: &Weight) -> ExtAffineElement {
        let mut w = self.translation(lambda);
        let mut len = self.length(&w);
        loop {
            let mut descended = false;
            for s in 0..self.datum.rank {
                let sw = self.mul(&self.gens[s], &w);
                let l2 = self.length(&sw);
                if l2 < len {
                    w = sw;
                    len = l2;
                    descended = true;
                    break;
                }
            }
            if !descended {
                return w;
            }
        }
    }

    /// The order on X from the paper: `λ ≤ μ` iff `w_λ ≤_Bru w_μ`.
    pub fn weight_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        let wl = self.min_coset_rep(lambda);
        let wm = self.min_coset_rep(mu);
        self.bruhat_leq(&wl, &wm)
    }

    /// A sort key whose lexicographic order linearly extends `weight_leq`
    /// on any set of weights with distinct cosets (e.g. dominant weights):
    /// strict Bruhat order strictly increases length.
    pub fn weight_order_key(&self, lambda: &Weight) -> (usize, Vec<i64>) {
        (self.length(&self.min_coset_rep(lambda)), lambda.0.clone())
    }

    pub fn export_bruhat_cache(&self) -> Vec<((ExtAffineElement, ExtAffineElement), bool)> {
        self.bruhat_memo
            .lock()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect()
    }

    pub fn import_bruhat_cache(
        &self,
        entries: impl IntoIterator<Item = ((ExtAffineElement, ExtAffineElement), bool)>,
    ) {
        let mut memo = self.bruhat_memo.lock().unwrap();
        for (k, v) in entries {
            memo.insert(k, v);
        }
    }
}

/// The finite reflection `s_α` for a (positive) root `α`.
fn reflection_in_root(datum: &RootDatum, root_weight: &Weight) -> WeylElement {
    let root = datum
        .positive_roots()
        .iter()
        .find(|r| r.weight == *root_weight)
        .expect("reflection root must be positive");
    // Build s_alpha as a word by conjugation: find v, s with v(alpha_s) =
    // alpha; then s_alpha = v s v^{-1}.  A breadth-first walk over the orbit
    // of the simple roots is enough at these ranks.
    use std::collections::VecDeque;
    let mut queue: VecDeque<(Weight, WeylElement, usize)> = VecDeque::new();
    let mut seen: Vec<Weight> = Vec::new();
    for s in 0..datum.rank {
        queue.push_back((
            datum.simple_roots[s].clone(),
            WeylElement::identity(datum),
            s,
        ));
        seen.push(datum.simple_roots[s].clone());
    }
    while let Some((w, v, s)) = queue.pop_front() {
        if w == root.weight {
            let sv = WeylElement::simple(datum, s);
            let vinv = v.inverse(datum);
            return v.mul(datum, &sv).mul(datum, &vinv);
        }
        for t in 0..datum.rank {
            let im = datum.simple_reflect(t, &w);
            if !seen.contains(&im) {
                seen.push(im.clone());
                queue.push_back((im, WeylElement::simple(datum, t).mul(datum, &v), s));
            }
        }
    }
    unreachable!("every root is W-conjugate to a simple root");
}
