//! Finite-dimensional graded quiver algebras presented by arrows and
//! relations.
//!
//! The algebra is realized concretely: a basis of path representatives, a
//! multiplication table, and graded Hom components `(e_v A e_w)_d`.  Paths
//! compose left to right (`p: x -> y`, `q: y -> z` gives `pq: x -> z`), and
//! a homogeneous element of `(e_v A e_w)_{t-s}` is a degree-zero map
//! `P_v{s} -> P_w{t}` between graded projectives.
//!
//! Finite-dimensionality is certified within a configured path-length
//! bound: if some length `m` has no surviving path, prefixes force every
//! longer path into the ideal.  Presentations that keep paths alive past
//! the bound are rejected.

use std::collections::HashMap;

use siltcone_core::field::Scalar;
use siltcone_core::linalg::RowSpan;

use crate::error::EngineError;

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>); // arrow indices; empty = trivial path (vertex recorded separately)

#[derive(Clone, Debug)]
pub struct BasisElem {
    pub src: usize,
    pub dst: usize,
    pub degree: i32,
    pub len: usize,
    /// Arrow indices; empty for the idempotent at `src == dst`.
    pub arrows: Vec<usize>,
}

/// One relation: a linear combination of parallel paths (same endpoints,
/// same internal degree), given by arrow-index words with coefficients.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub terms: Vec<(F, Vec<usize>)>,
}

pub struct Algebra<F: Scalar> {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub basis: Vec<BasisElem>,
    pub heredity_order: Option<Vec<usize>>,
    /// `mul[i][j]` = coordinates of `basis[i] * basis[j]`.
    mul: Vec<Vec<Vec<(usize, F)>>>,
    /// basis indices of the idempotents, per vertex
    idem: Vec<usize>,
    hom_components: HashMap<(usize, usize, i32), Vec<usize>>,
    pub max_degree: i32,
    pub min_degree: i32,
}

const LENGTH_BOUNDS: [usize; 3] = [8, 16, 32];

impl<F: Scalar> Algebra<F> {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation<F>>,
        heredity_order: Option<Vec<usize>>,
    ) -> Result<Self, EngineError> {
        if vertices.is_empty() {
            return Err(EngineError::Presentation("no vertices".into()));
        }
        for a in &arrows {
            if a.src >= vertices.len() || a.dst >= vertices.len() {
                return Err(EngineError::Presentation(format!("arrow {} endpoint out of range", a.name)));
            }
            if a.degree < 0 {
                return Err(EngineError::Presentation(format!(
                    "arrow {} has negative internal degree",
                    a.name
                )));
            }
        }
        if let Some(ord) = &heredity_order {
            let mut sorted = ord.clone();
            sorted.sort_unstable();
            if sorted != (0..vertices.len()).collect::<Vec<_>>() {
                return Err(EngineError::Presentation("heredity_order must list every vertex once".into()));
            }
        }
        for r in &relations {
            let mut sig: Option<(usize, usize, i32)> = None;
            for (_, word) in &r.terms {
                let (s, d, deg) = word_signature(&arrows, word)
                    .ok_or_else(|| EngineError::Presentation("relation word is not composable".into()))?;
                match sig {
                    None => sig = Some((s, d, deg)),
                    Some(prev) => {
                        if (prev.0, prev.1) != (s, d) {
                            return Err(EngineError::Presentation(
                                "relation mixes paths with different endpoints".into(),
                            ));
                        }
                        if prev.2 != deg {
                            return Err(EngineError::Presentation(
                                "relation is not homogeneous in internal degree".into(),
                            ));
                        }
                    }
                }
            }
        }

        for bound in LENGTH_BOUNDS {
            match Self::try_build(&vertices, &arrows, &relations, bound)? {
                Some((basis, reduce)) => {
                    return Self::finish(vertices, arrows, heredity_order, basis, reduce);
                }
                None => continue,
            }
        }
        Err(EngineError::Presentation(format!(
            "paths survive past length {}; algebra not certified finite-dimensional",
            LENGTH_BOUNDS.last().unwrap()
        )))
    }

    /// Enumerate paths to `bound`, reduce by the relation ideal, and accept
    /// when some length level dies out early enough for closed products.
    #[allow(clippy::type_complexity)]
    fn try_build(
        vertices: &[String],
        arrows: &[Arrow],
        relations: &[Relation<F>],
        bound: usize,
    ) -> Result<Option<(Vec<BasisElem>, Reducer<F>)>, EngineError> {
        // trivial paths per vertex as (vertex, empty); nontrivial by arrows
        let mut all: Vec<(Option<usize>, Vec<usize>)> = Vec::new();
        for v in 0..vertices.len() {
            all.push((Some(v), vec![]));
        }
        let mut frontier: Vec<Vec<usize>> = arrows.iter().enumerate().map(|(i, _)| vec![i]).collect();
        let mut enumerated_max = 0usize;
        let mut len = 1usize;
        while len <= bound && !frontier.is_empty() {
            for w in &frontier {
                all.push((None, w.clone()));
            }
            enumerated_max = len;
            let mut next = Vec::new();
            for w in &frontier {
                let last = *w.last().unwrap();
                for (i, a) in arrows.iter().enumerate() {
                    if arrows[last].dst == a.src {
                        let mut ext = w.clone();
                        ext.push(i);
                        next.push(ext);
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        let natural_death = frontier.is_empty();
        if !natural_death && relations.is_empty() {
            return Ok(None); // paths grow without relations to stop them
        }
        let index: HashMap<(Option<usize>, Vec<usize>), usize> = all
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();

        // ideal span: u * r * v for all composable u, v within the bound
        let mut span: RowSpan<F> = RowSpan::new(all.len());
        for r in relations {
            let max_term = r.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0);
            let (rsrc, rdst, _) = word_signature(arrows, &r.terms[0].1).unwrap();
            for (utriv, u) in all.iter() {
                let u_dst = path_dst(vertices.len(), arrows, *utriv, u);
                if u_dst != rsrc {
                    continue;
                }
                for (vtriv, v) in all.iter() {
                    let v_src = path_src(vertices.len(), arrows, *vtriv, v);
                    if v_src != rdst {
                        continue;
                    }
                    if u.len() + max_term + v.len() > bound {
                        continue;
                    }
                    let mut vecr = vec![F::zero(); all.len()];
                    let mut ok = true;
                    for (c, w) in &r.terms {
                        let mut word = u.clone();
                        word.extend(w);
                        word.extend(v);
                        let key = if word.is_empty() { (Some(u_dst), vec![]) } else { (None, word) };
                        match index.get(&key) {
                            Some(&k) => vecr[k] = vecr[k].clone() + c.clone(),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        span.insert(vecr);
                    }
                }
            }
        }

        // surviving basis = non-pivot paths
        let mut is_basis = vec![true; all.len()];
        {
            // pivot detection: reduce each unit vector; a path is a pivot if
            // reducing its unit vector kills its own coordinate
            for (i, flag) in is_basis.iter_mut().enumerate() {
                let mut unit = vec![F::zero(); all.len()];
                unit[i] = F::one();
                let red = span.reduce(unit);
                if red[i].is_zero() {
                    *flag = false;
                }
            }
        }
        // certification: either the path enumeration died out naturally, or
        // some length level has no surviving basis path (prefixes then force
        // every longer path into the ideal)
        let mut max_basis_len = 0usize;
        let mut len_alive = vec![false; enumerated_max + 1];
        for (i, (triv, w)) in all.iter().enumerate() {
            if is_basis[i] {
                let l = if triv.is_some() { 0 } else { w.len() };
                len_alive[l] = true;
                max_basis_len = max_basis_len.max(l);
            }
        }
        let certified = natural_death || (1..=enumerated_max).any(|l| !len_alive[l]);
        if !certified {
            return Ok(None);
        }
        let max_rel = relations
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, w)| w.len()))
            .max()
            .unwrap_or(0);
        if !natural_death && 2 * max_basis_len + max_rel > bound {
            return Ok(None); // need a larger bound to close products
        }

        let basis: Vec<BasisElem> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| is_basis[*i])
            .map(|(_, (triv, w))| match triv {
                Some(v) => BasisElem {
                    src: *v,
                    dst: *v,
                    degree: 0,
                    len: 0,
                    arrows: vec![],
                },
                None => {
                    let src = arrows[w[0]].src;
                    let dst = arrows[*w.last().unwrap()].dst;
                    let degree = w.iter().map(|&a| arrows[a].degree).sum();
                    BasisElem {
                        src,
                        dst,
                        degree,
                        len: w.len(),
                        arrows: w.clone(),
                    }
                }
            })
            .collect();
        let reducer = Reducer {
            all,
            index,
            span,
            basis_of_all: is_basis,
        };
        Ok(Some((basis, reducer)))
    }

    fn finish(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        heredity_order: Option<Vec<usize>>,
        basis: Vec<BasisElem>,
        reducer: Reducer<F>,
    ) -> Result<Self, EngineError> {
        // map from "all paths" coordinates to basis coordinates
        let mut all_to_basis = vec![usize::MAX; reducer.all.len()];
        {
            let mut b = 0usize;
            for (i, &flag) in reducer.basis_of_all.iter().enumerate() {
                if flag {
                    all_to_basis[i] = b;
                    b += 1;
                }
            }
        }
        let dim = basis.len();
        let reduce_word = |word: &[usize], triv: Option<usize>| -> Option<Vec<(usize, F)>> {
            let key = if word.is_empty() {
                (Some(triv.expect("trivial path needs a vertex")), vec![])
            } else {
                (None, word.to_vec())
            };
            let idx = reducer.index.get(&key)?;
            let mut unit = vec![F::zero(); reducer.all.len()];
            unit[*idx] = F::one();
            let red = reducer.span.reduce(unit);
            Some(
                red.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (all_to_basis[i], c.clone()))
                    .collect(),
            )
        };

        let mut mul: Vec<Vec<Vec<(usize, F)>>> = vec![vec![Vec::new(); dim]; dim];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                if bi.dst != bj.src {
                    continue;
                }
                let mut word = bi.arrows.clone();
                word.extend(&bj.arrows);
                let triv = if word.is_empty() { Some(bi.src) } else { None };
                let prod = reduce_word(&word, triv).ok_or_else(|| {
                    EngineError::Presentation("basis product escapes the certified bound".into())
                })?;
                mul[i][j] = prod;
            }
        }

        let mut idem = vec![usize::MAX; vertices.len()];
        for (i, b) in basis.iter().enumerate() {
            if b.len == 0 {
                idem[b.src] = i;
            }
        }
        if idem.iter().any(|&i| i == usize::MAX) {
            return Err(EngineError::Presentation("an idempotent died in the quotient".into()));
        }

        let mut hom_components: HashMap<(usize, usize, i32), Vec<usize>> = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            hom_components.entry((b.src, b.dst, b.degree)).or_default().push(i);
        }
        let max_degree = basis.iter().map(|b| b.degree).max().unwrap_or(0);
        let min_degree = basis.iter().map(|b| b.degree).min().unwrap_or(0);

        let alg = Algebra {
            vertices,
            arrows,
            basis,
            heredity_order,
            mul,
            idem,
            hom_components,
            max_degree,
            min_degree,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), EngineError> {
        // associativity on all basis triples
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for k in 0..self.dim() {
                    let ab = self.mul_basis(i, j);
                    let bc = self.mul_basis(j, k);
                    let lhs = self.mul_elem(&ab, &self.basis_elem(k));
                    let rhs = self.mul_elem(&self.basis_elem(i), &bc);
                    if lhs != rhs {
                        return Err(EngineError::Presentation(format!(
                            "multiplication not associative at basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // positive-length span must be nilpotent
        let positive: Vec<Vec<F>> = (0..self.dim())
            .filter(|&i| self.basis[i].len > 0)
            .map(|i| self.basis_elem(i))
            .collect();
        let mut layer = positive.clone();
        for _ in 0..self.dim() + 1 {
            if layer.iter().all(|v| v.iter().all(F::is_zero)) {
                return Ok(());
            }
            let mut next = Vec::new();
            for x in &layer {
                for y in &positive {
                    let p = self.mul_elem(x, y);
                    if !p.iter().all(F::is_zero) {
                        next.push(p);
                    }
                }
            }
            layer = next;
        }
        Err(EngineError::Presentation(
            "positive-length part is not nilpotent; presentation rejected".into(),
        ))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn zero_elem(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_elem(&self, i: usize) -> Vec<F> {
        let mut v = self.zero_elem();
        v[i] = F::one();
        v
    }

    pub fn idempotent(&self, v: usize) -> Vec<F> {
        self.basis_elem(self.idem[v])
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idem[v]
    }

    fn mul_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = self.zero_elem();
        for (k, c) in &self.mul[i][j] {
            out[*k] = out[*k].clone() + c.clone();
        }
        out
    }

    pub fn mul_elem(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero_elem();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                for (k, c) in &self.mul[i][j] {
                    out[*k] = out[*k].clone() + ca.clone() * cb.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Basis indices of `(e_v A e_w)_d`.
    pub fn hom_component(&self, v: usize, w: usize, d: i32) -> &[usize] {
        self.hom_components
            .get(&(v, w, d))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Invertibility in the corner `e_v A e_v`: unit iff the idempotent
    /// coefficient is nonzero (the positive-length part is nilpotent).
    pub fn corner_inverse(&self, v: usize, x: &[F]) -> Option<Vec<F>> {
        let e = self.idem[v];
        let c = x[e].clone();
        let cinv = c.try_inv()?;
        // x = c(e + n), n nilpotent: x^{-1} = c^{-1} (e - n + n^2 - ...)
        let mut n = x.to_vec();
        for (i, val) in n.iter_mut().enumerate() {
            *val = val.clone() * cinv.clone();
            if i == e {
                *val = val.clone() - F::one();
            }
        }
        let mut inv = self.idempotent(v);
        let mut power = self.idempotent(v);
        for k in 1..=self.dim() {
            power = self.mul_elem(&power, &n);
            if power.iter().all(F::is_zero) {
                break;
            }
            let sign = if k % 2 == 1 { -F::one() } else { F::one() };
            for (a, b) in inv.iter_mut().zip(&power) {
                *a = a.clone() + sign.clone() * b.clone();
            }
        }
        for val in inv.iter_mut() {
            *val = val.clone() * cinv.clone();
        }
        debug_assert_eq!(self.mul_elem(x, &inv), self.idempotent(v));
        debug_assert_eq!(self.mul_elem(&inv, x), self.idempotent(v));
        Some(inv)
    }

    pub fn elem_to_string(&self, x: &[F]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if self.basis[i].len == 0 {
                format!("e_{}", self.vertices[self.basis[i].src])
            } else {
                self.basis[i]
                    .arrows
                    .iter()
                    .map(|&a| self.arrows[a].name.clone())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            parts.push(format!("{c}·{name}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

struct Reducer<F: Scalar> {
    all: Vec<(Option<usize>, Vec<usize>)>,
    index: HashMap<(Option<usize>, Vec<usize>), usize>,
    span: RowSpan<F>,
    basis_of_all: Vec<bool>,
}

fn word_signature(arrows: &[Arrow], word: &[usize]) -> Option<(usize, usize, i32)> {
    if word.is_empty() {
        return None;
    }
    let mut deg = 0;
    for w in word.windows(2) {
        if arrows[w[0]].dst != arrows[w[1]].src {
            return None;
        }
    }
    for &a in word {
        deg += arrows[a].degree;
    }
    Some((arrows[word[0]].src, arrows[*word.last().unwrap()].dst, deg))
}

fn path_src(_nv: usize, arrows: &[Arrow], triv: Option<usize>, w: &[usize]) -> usize {
    match triv {
        Some(v) => v,
        None => arrows[w[0]].src,
    }
}

fn path_dst(_nv: usize, arrows: &[Arrow], triv: Option<usize>, w: &[usize]) -> usize {
    match triv {
        Some(v) => v,
        None => arrows[*w.last().unwrap()].dst,
    }
}

// --- text format -----------------------------------------------------------

/// Parse the `.alg` presentation format:
///
/// ```text
/// [field]
/// Q            # or: F 5
/// [vertices]
/// 1
/// 2
/// [arrows]
/// a 1 2 1      # name src dst degree
/// [relations]
/// a*b - 2 b*a  # linear combinations of composable arrow words
/// [heredity_order]
/// 1
/// 2
/// ```
pub fn parse_presentation(text: &str) -> Result<ParsedPresentation, EngineError> {
    let mut section = String::new();
    let mut field_line = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<String> = Vec::new();
    let mut heredity: Vec<String> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') && line.ends_with(']') {
            section = line[1..line.len() - 1].to_string();
            continue;
        }
        match section.as_str() {
            "field" => field_line = Some(line.to_string()),
            "vertices" => vertices.push(line.to_string()),
            "arrows" => {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 {
                    return Err(EngineError::Presentation(format!("bad arrow line: {line}")));
                }
                let find = |name: &str| {
                    vertices
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| EngineError::Presentation(format!("unknown vertex {name}")))
                };
                arrows.push(Arrow {
                    name: parts[0].to_string(),
                    src: find(parts[1])?,
                    dst: find(parts[2])?,
                    degree: parts[3]
                        .parse()
                        .map_err(|_| EngineError::Presentation(format!("bad degree in: {line}")))?,
                });
            }
            "relations" => relation_lines.push(line.to_string()),
            "heredity_order" => heredity.push(line.to_string()),
            other => {
                return Err(EngineError::Presentation(format!("unknown section [{other}]")));
            }
        }
    }
    let field = match field_line.as_deref() {
        Some("Q") | None => FieldSpec::Rational,
        Some(s) => {
            let parts: Vec<&str> = s.split_whitespace().collect();
            if parts.len() == 2 && parts[0] == "F" {
                let p: u64 = parts[1]
                    .parse()
                    .map_err(|_| EngineError::Presentation(format!("bad prime: {s}")))?;
                FieldSpec::Prime(p)
            } else {
                return Err(EngineError::Presentation(format!("bad field spec: {s}")));
            }
        }
    };
    let heredity_order = if heredity.is_empty() {
        None
    } else {
        let mut ord = Vec::new();
        for name in &heredity {
            let idx = vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| EngineError::Presentation(format!("unknown vertex {name} in heredity order")))?;
            ord.push(idx);
        }
        Some(ord)
    };
    Ok(ParsedPresentation {
        field,
        vertices,
        arrows,
        relation_lines,
        heredity_order,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

pub struct ParsedPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relation_lines: Vec<String>,
    pub heredity_order: Option<Vec<usize>>,
}

impl ParsedPresentation {
    /// Instantiate over a concrete scalar type; `conv` interprets a
    /// coefficient literal like `3` or `-1/2`.
    pub fn instantiate<F: Scalar>(
        &self,
        conv: impl Fn(&str) -> Result<F, EngineError>,
    ) -> Result<Algebra<F>, EngineError> {
        let mut relations = Vec::new();
        for line in &self.relation_lines {
            relations.push(parse_relation::<F>(line, &self.arrows, &conv)?);
        }
        Algebra::new(
            self.vertices.clone(),
            self.arrows.clone(),
            relations,
            self.heredity_order.clone(),
        )
    }
}

/// Grammar per term: `[coeff] word` with `word = name(*name)*`; terms are
/// joined by `+` or `-`.
fn parse_relation<F: Scalar>(
    line: &str,
    arrows: &[Arrow],
    conv: &impl Fn(&str) -> Result<F, EngineError>,
) -> Result<Relation<F>, EngineError> {
    let mut terms = Vec::new();
    let normalized = line.replace('-', "+-");
    for raw_term in normalized.split('+') {
        let term = raw_term.trim();
        if term.is_empty() {
            continue;
        }
        let (mut sign, term) = match term.strip_prefix('-') {
            Some(rest) => (-F::one(), rest.trim()),
            None => (F::one(), term),
        };
        let parts: Vec<&str> = term.split_whitespace().collect();
        let (coeff_str, word_str) = match parts.len() {
            1 => (None, parts[0]),
            2 => (Some(parts[0]), parts[1]),
            _ => {
                return Err(EngineError::Presentation(format!("bad relation term: {term}")));
            }
        };
        if let Some(c) = coeff_str {
            sign = sign * conv(c)?;
        }
        let word: Vec<usize> = word_str
            .split('*')
            .map(|name| {
                arrows
                    .iter()
                    .position(|a| a.name == name)
                    .ok_or_else(|| EngineError::Presentation(format!("unknown arrow {name}")))
            })
            .collect::<Result<_, _>>()?;
        terms.push((sign, word));
    }
    if terms.is_empty() {
        return Err(EngineError::Presentation(format!("empty relation: {line}")));
    }
    Ok(Relation { terms })
}

/// Coefficient parsers for the two supported fields.
pub fn rat_literal(s: &str) -> Result<siltcone_core::Rat, EngineError> {
    let parse_int = |t: &str| -> Result<i64, EngineError> {
        t.parse::<i64>()
            .map_err(|_| EngineError::Presentation(format!("bad integer literal: {t}")))
    };
    if let Some((num, den)) = s.split_once('/') {
        let d = parse_int(den)?;
        if d == 0 {
            return Err(EngineError::Presentation("zero denominator".into()));
        }
        Ok(siltcone_core::Rat::new(parse_int(num)?.into(), d.into()))
    } else {
        Ok(siltcone_core::Rat::from_integer(parse_int(s)?.into()))
    }
}

pub fn fp_literal(p: u64) -> impl Fn(&str) -> Result<siltcone_core::Fp, EngineError> {
    move |s: &str| {
        let v: i64 = s
            .parse()
            .map_err(|_| EngineError::Presentation(format!("bad integer literal: {s}")))?;
        Ok(siltcone_core::Fp::new(p, v))
    }
}
