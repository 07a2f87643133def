//! Path algebras of quivers with relations.
//!
//! Paths are written in traversal order. The product `p * q` of two paths is
//! "first q, then p", so left modules are covariant representations and
//! `A e_i` is spanned by the paths starting at `i`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar};

use super::{Algebra, AlgebraData, Provenance};

pub const DEFAULT_MAX_PATH_LENGTH: usize = 64;

const MAX_BASIS_ELEMENTS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    /// 0-based vertex indices.
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A linear combination of paths, each given by arrow labels in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Vec<String>, Scalar)>,
}

impl Relation {
    pub fn monomial(path: &[&str], field: FieldSpec) -> Self {
        Relation {
            terms: vec![(path.iter().map(|s| s.to_string()).collect(), field.one())],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: &[(usize, usize, &str)]) -> Self {
        Quiver {
            vertices,
            arrows: arrows
                .iter()
                .map(|&(s, t, l)| Arrow {
                    source: s,
                    target: t,
                    label: l.to_string(),
                })
                .collect(),
            relations: Vec::new(),
        }
    }

    pub fn with_relation(mut self, r: Relation) -> Self {
        self.relations.push(r);
        self
    }
}

/// Words compare by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Word(Vec<u32>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Poly = BTreeMap<Word, Scalar>;

fn add_term(p: &mut Poly, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&w) {
        Some(v) => {
            let s = &*v + &c;
            if s.is_zero() {
                p.remove(&w);
            } else {
                *v = s;
            }
        }
        None => {
            p.insert(w, c);
        }
    }
}

fn leading(p: &Poly) -> Option<(&Word, &Scalar)> {
    p.iter().next_back()
}

fn make_monic(p: Poly) -> Poly {
    let inv = leading(&p)
        .expect("nonzero")
        .1
        .inv()
        .expect("nonzero leading coefficient");
    p.into_iter().map(|(w, c)| (w, &c * &inv)).collect()
}

fn find_subword(hay: &[u32], needle: &[u32]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

struct Basis {
    rules: Vec<Poly>,
    tips: HashMap<Vec<u32>, usize>,
}

impl Basis {
    fn tip_in(&self, w: &[u32]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for end in start + 1..=w.len() {
                if let Some(&r) = self.tips.get(&w[start..end]) {
                    return Some((r, start));
                }
            }
        }
        None
    }

    fn reduce(&self, mut p: Poly) -> Poly {
        let mut done = Poly::new();
        while let Some((w, c)) = p.pop_last() {
            match self.tip_in(&w.0) {
                None => add_term(&mut done, w, c),
                Some((r, start)) => {
                    let rule = &self.rules[r];
                    let tip_len = leading(rule).unwrap().0 .0.len();
                    let (pre, post) = (&w.0[..start], &w.0[start + tip_len..]);
                    // w = pre . tip . post and tip = -(lower terms of rule)
                    for (rw, rc) in rule.iter().rev().skip(1) {
                        let mut nw = pre.to_vec();
                        nw.extend_from_slice(&rw.0);
                        nw.extend_from_slice(post);
                        add_term(&mut p, Word(nw), -(&c * rc));
                    }
                }
            }
        }
        done
    }
}

fn groebner(initial: Vec<Poly>, max_len: usize) -> Result<Basis> {
    let mut basis = Basis {
        rules: Vec::new(),
        tips: HashMap::new(),
    };
    let mut queue: Vec<Poly> = initial;
    let mut active: Vec<bool> = Vec::new();
    while let Some(p) = queue.pop() {
        let p = basis.reduce(p);
        if p.is_empty() {
            continue;
        }
        let p = make_monic(p);
        let tip = leading(&p).unwrap().0 .0.clone();
        // Older rules whose tip contains the new tip are retired and re-reduced.
        let mut retired = Vec::new();
        for (i, r) in basis.rules.iter().enumerate() {
            if active[i] && find_subword(&leading(r).unwrap().0 .0, &tip).is_some() {
                retired.push(i);
            }
        }
        for i in retired {
            active[i] = false;
            let old_tip = leading(&basis.rules[i]).unwrap().0 .0.clone();
            basis.tips.remove(&old_tip);
            queue.push(basis.rules[i].clone());
        }
        let idx = basis.rules.len();
        basis.rules.push(p);
        active.push(true);
        basis.tips.insert(tip.clone(), idx);
        if basis.rules.len() > MAX_BASIS_ELEMENTS {
            return Err(Error::InfiniteDimensional(
                "relation reduction did not terminate within the size limit".into(),
            ));
        }
        // Overlaps of the new rule with every active rule, in both orders.
        for j in (0..basis.rules.len()).filter(|&j| active[j]) {
            let other_tip = leading(&basis.rules[j]).unwrap().0 .0.clone();
            for (a, b, ta, tb) in [(idx, j, &tip, &other_tip), (j, idx, &other_tip, &tip)] {
                for k in 1..ta.len().min(tb.len()) {
                    if ta[ta.len() - k..] != tb[..k] {
                        continue;
                    }
                    if ta.len() + tb.len() - k > max_len {
                        continue;
                    }
                    let left_ext = &tb[k..];
                    let right_pre = &ta[..ta.len() - k];
                    let mut s = Poly::new();
                    for (w, c) in &basis.rules[a] {
                        let mut nw = w.0.clone();
                        nw.extend_from_slice(left_ext);
                        add_term(&mut s, Word(nw), c.clone());
                    }
                    for (w, c) in &basis.rules[b] {
                        let mut nw = right_pre.to_vec();
                        nw.extend_from_slice(&w.0);
                        add_term(&mut s, Word(nw), -c);
                    }
                    if !s.is_empty() {
                        queue.push(s);
                    }
                }
                if a == b {
                    break;
                }
            }
        }
    }
    let mut rules = Vec::new();
    let mut tips = HashMap::new();
    for (i, r) in basis.rules.into_iter().enumerate() {
        if active[i] {
            tips.insert(leading(&r).unwrap().0 .0.clone(), rules.len());
            rules.push(r);
        }
    }
    Ok(Basis { rules, tips })
}

/// Builds kQ/(relations) with basis the vertices followed by the reduced paths.
pub fn path_algebra(q: &Quiver, field: FieldSpec, max_path_length: usize) -> Result<Arc<Algebra>> {
    let nv = q.vertices;
    if nv == 0 {
        return Err(Error::InvalidAlgebra("a quiver needs at least one vertex".into()));
    }
    let mut index: HashMap<&str, u32> = HashMap::new();
    for (k, a) in q.arrows.iter().enumerate() {
        if a.source >= nv || a.target >= nv {
            return Err(Error::InvalidAlgebra(format!(
                "arrow `{}` has an endpoint out of range",
                a.label
            )));
        }
        if a.label.is_empty() || index.insert(&a.label, k as u32).is_some() {
            return Err(Error::InvalidAlgebra(format!(
                "arrow label `{}` is empty or repeated",
                a.label
            )));
        }
    }
    let src = |w: &[u32]| q.arrows[w[0] as usize].source;
    let tgt = |w: &[u32]| q.arrows[*w.last().unwrap() as usize].target;

    let mut initial = Vec::new();
    for r in &q.relations {
        let mut parts: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for (path, c) in &r.terms {
            if c.field() != field {
                return Err(Error::MalformedRelation("coefficient from a different field".into()));
            }
            if path.len() < 2 {
                return Err(Error::MalformedRelation(format!(
                    "relation path `{}` has length below 2",
                    path.join(".")
                )));
            }
            let mut w = Vec::with_capacity(path.len());
            for l in path {
                let k = *index
                    .get(l.as_str())
                    .ok_or_else(|| Error::MalformedRelation(format!("unknown arrow `{l}`")))?;
                w.push(k);
            }
            for pair in w.windows(2) {
                if q.arrows[pair[0] as usize].target != q.arrows[pair[1] as usize].source {
                    return Err(Error::MalformedRelation(format!(
                        "path `{}` is not composable",
                        path.join(".")
                    )));
                }
            }
            let key = (src(&w), tgt(&w));
            add_term(parts.entry(key).or_default(), Word(w), c.clone());
        }
        initial.extend(parts.into_values().filter(|p| !p.is_empty()));
    }

    let cap = 2 * (max_path_length + 1);
    let gb = groebner(initial, cap)?;

    let mut paths: Vec<Vec<u32>> = Vec::new();
    let mut level: Vec<Vec<u32>> = (0..q.arrows.len() as u32).map(|a| vec![a]).collect();
    let mut len = 1;
    while !level.is_empty() {
        if len > max_path_length {
            return Err(Error::InfiniteDimensional(format!(
                "irreducible path of length {len} exceeds the bound {max_path_length}"
            )));
        }
        level.sort();
        paths.extend(level.iter().cloned());
        if paths.len() > MAX_BASIS_ELEMENTS {
            return Err(Error::InfiniteDimensional("too many irreducible paths".into()));
        }
        let mut next = Vec::new();
        for w in &level {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.source != tgt(w) {
                    continue;
                }
                let mut nw = w.clone();
                nw.push(k as u32);
                let reducible = (0..nw.len()).any(|s| gb.tips.contains_key(&nw[s..]));
                if !reducible {
                    next.push(nw);
                }
            }
        }
        level = next;
        len += 1;
    }

    let dim = nv + paths.len();
    let path_index: HashMap<Vec<u32>, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), nv + i)).collect();
    let single_char = q.arrows.iter().all(|a| a.label.chars().count() == 1);
    let mut labels: Vec<String> = (1..=nv).map(|v| format!("e{v}")).collect();
    for p in &paths {
        let parts: Vec<&str> = p.iter().map(|&k| q.arrows[k as usize].label.as_str()).collect();
        labels.push(parts.join(if single_char { "" } else { "." }));
    }

    let coords = |poly: &Poly| -> Mat {
        let mut v = Mat::zeros(field, dim, 1);
        for (w, c) in poly {
            let i = path_index[&w.0];
            v.set(i, 0, c);
        }
        v
    };
    let start_of = |i: usize| if i < nv { i } else { src(&paths[i - nv]) };
    let end_of = |i: usize| if i < nv { i } else { tgt(&paths[i - nv]) };

    let mut left = vec![Mat::zeros(field, dim, dim); dim];
    for (i, li) in left.iter_mut().enumerate() {
        for j in 0..dim {
            // e_i * e_j means: traverse j, then i.
            if end_of(j) != start_of(i) {
                continue;
            }
            let col = if i < nv {
                Mat::unit_vector(field, dim, j)
            } else if j < nv {
                Mat::unit_vector(field, dim, i)
            } else {
                let mut w = paths[j - nv].clone();
                w.extend_from_slice(&paths[i - nv]);
                let mut p = Poly::new();
                p.insert(Word(w), field.one());
                coords(&gb.reduce(p))
            };
            li.set_block(0, j, &col);
        }
    }

    let mut unit = Mat::zeros(field, dim, 1);
    for v in 0..nv {
        unit.set(v, 0, &field.one());
    }
    let idempotents: Vec<Mat> = (0..nv).map(|v| Mat::unit_vector(field, dim, v)).collect();
    let radical_cols: Vec<usize> = (nv..dim).collect();
    let radical = Mat::identity(field, dim).select_cols(&radical_cols);

    let detail = format!(
        "{} vertices, arrows [{}], {} relations",
        nv,
        q.arrows
            .iter()
            .map(|a| format!("{}:{}->{}", a.label, a.source + 1, a.target + 1))
            .collect::<Vec<_>>()
            .join(", "),
        q.relations.len()
    );
    let alg = Algebra::new_trusted(AlgebraData {
        field,
        labels,
        left,
        unit,
        idempotents: Some(idempotents),
        blocks: Vec::new(),
        closed_radical: Some(radical.clone()),
        provenance: Provenance::new("path", Some(detail)),
    });

    // The arrow ideal must be nilpotent for the relations to be admissible.
    let mut power = radical;
    for _ in 0..=dim {
        if power.cols() == 0 {
            return Ok(alg);
        }
        power = alg.span_products(alg.closed_form_radical().unwrap(), &power);
    }
    Err(Error::MalformedRelation(
        "relations do not generate an admissible ideal: the arrow ideal is not nilpotent".into(),
    ))
}

/// Linearly oriented A_n quiver 1 -> 2 -> ... -> n with arrows a1, a2, ...
pub fn linear_quiver(n: usize) -> Quiver {
    let arrows: Vec<(usize, usize, String)> = (0..n.saturating_sub(1))
        .map(|i| (i, i + 1, format!("a{}", i + 1)))
        .collect();
    Quiver {
        vertices: n,
        arrows: arrows
            .into_iter()
            .map(|(s, t, l)| Arrow {
                source: s,
                target: t,
                label: l,
            })
            .collect(),
        relations: Vec::new(),
    }
}
