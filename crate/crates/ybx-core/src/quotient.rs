//! The structure group on `ℤⁿ` coordinates, the mod-p congruence, the
//! finite quotient `W` of order `pⁿ`, the germ and its Cayley graph,
//! presentations, and the exact sequence `1 → ℤⁿ → G → W → 1`.
//!
//! The group product extends the monoid product through the mod-p
//! invariance of the cocycle: `π(u)` only depends on the residues of `u`,
//! so `u · v = u + π(ū)⁻¹[v]` is well defined on all of `ℤⁿ`. This
//! realization is certified rather than assumed: the verification suite
//! checks monoid agreement on `ℕⁿ`, the group axioms, relation
//! satisfaction, and the recombination identity of `decompose`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::LabeledDigraph;
use crate::monoid::{self, box_coords, MonCoord};
use crate::rcq::{frozen_word, Check, RcTable};
use crate::word::{letter, GenWord};

/// Extended coordinates of an element of the structure group `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrpCoord(Vec<i64>);

impl GrpCoord {
    pub fn new(v: Vec<i64>) -> Self {
        GrpCoord(v)
    }

    pub fn zero(n: usize) -> Self {
        GrpCoord(vec![0; n])
    }

    pub fn unit(n: usize, x: usize) -> Self {
        assert!(x < n, "generator out of range");
        let mut v = vec![0; n];
        v[x] = 1;
        GrpCoord(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, x: usize) -> i64 {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &GrpCoord) -> GrpCoord {
        assert_eq!(self.n(), other.n(), "size mismatch");
        GrpCoord(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise residues in `{0, .., p-1}`.
    pub fn reduce_mod(&self, p: usize) -> MonCoord {
        MonCoord::new(
            self.0
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as usize)
                .collect(),
        )
    }

    pub fn from_mon(u: &MonCoord) -> GrpCoord {
        GrpCoord(u.as_slice().iter().map(|&c| c as i64).collect())
    }

    /// Back to monoid coordinates; `None` if any entry is negative.
    pub fn to_mon(&self) -> Option<MonCoord> {
        if self.0.iter().any(|&c| c < 0) {
            return None;
        }
        Some(MonCoord::new(self.0.iter().map(|&c| c as usize).collect()))
    }

    pub fn render(&self) -> String {
        format!(
            "({})",
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// An element of the quotient `W`: a vector of residues mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElem(Vec<usize>);

impl WElem {
    pub fn new(v: Vec<usize>, p: usize) -> Self {
        assert!(v.iter().all(|&c| c < p.max(1)), "residue out of range");
        WElem(v)
    }

    pub fn identity(n: usize) -> Self {
        WElem(vec![0; n])
    }

    pub fn from_mon(u: &MonCoord, p: usize) -> Self {
        WElem::new(u.as_slice().to_vec(), p)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_mon(&self) -> MonCoord {
        MonCoord::new(self.0.clone())
    }

    pub fn to_grp(&self) -> GrpCoord {
        GrpCoord(self.0.iter().map(|&c| c as i64).collect())
    }

    /// Generator length inside `W`: the coordinate sum.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }
}

/// All `pⁿ` elements of `W` in lexicographic order.
pub fn w_elements(n: usize, p: usize) -> Vec<WElem> {
    box_coords(n, p.saturating_sub(1))
        .into_iter()
        .map(|u| WElem(u.as_slice().to_vec()))
        .collect()
}

/// The product in `G`: `u · v = u + π(ū)⁻¹[v]` with `ū` the mod-p
/// reduction of `u`. Agrees with the monoid product on `ℕⁿ`.
pub fn g_mult(t: &RcTable, p: usize, u: &GrpCoord, v: &GrpCoord) -> GrpCoord {
    let pi = monoid::pi_of(t, &u.reduce_mod(p));
    GrpCoord(
        u.as_slice()
            .iter()
            .zip(pi.pull_back(v.as_slice()))
            .map(|(a, b)| a + b)
            .collect(),
    )
}

/// The group inverse: `u⁻¹ = -π(ū)[u]`.
pub fn g_inverse(t: &RcTable, p: usize, u: &GrpCoord) -> GrpCoord {
    let pi = monoid::pi_of(t, &u.reduce_mod(p));
    GrpCoord(pi.push_forward(u.as_slice()).into_iter().map(|c| -c).collect())
}

/// Expresses `u` as `Δ^{pe} · h` with `e ∈ ℤ` and `h ∈ M`: `Δᵖ` has
/// coordinates `p(p-1)·(1, .., 1)`, `e` is the floor of
/// `min(u) / p(p-1)`, and `h = u - p(p-1)e·(1, .., 1)` is nonnegative.
pub fn decompose(t: &RcTable, p: usize, u: &GrpCoord) -> Result<(i64, MonCoord)> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    let q = (p * (p - 1)) as i64;
    let min = *u.as_slice().iter().min().expect("nonempty coordinates");
    let e = min.div_euclid(q);
    let h = GrpCoord(u.as_slice().iter().map(|&c| c - q * e).collect())
        .to_mon()
        .expect("shifted coordinates are nonnegative");
    let _ = t;
    Ok((e, h))
}

/// Projection `G → W`: componentwise reduction mod p. A surjective
/// homomorphism with kernel the frozen subgroup `(pℤ)ⁿ`.
pub fn project_w(p: usize, u: &GrpCoord) -> WElem {
    WElem(u.reduce_mod(p).as_slice().to_vec())
}

/// The induced product on `W`.
pub fn w_mult(t: &RcTable, p: usize, a: &WElem, b: &WElem) -> WElem {
    project_w(p, &g_mult(t, p, &a.to_grp(), &b.to_grp()))
}

/// The inverse in `W`.
pub fn w_inverse(t: &RcTable, p: usize, a: &WElem) -> WElem {
    project_w(p, &g_inverse(t, p, &a.to_grp()))
}

/// `W` with multiplication restricted to the pairs whose generator
/// lengths add: the germ from which the monoid can be rebuilt.
#[derive(Debug, Clone)]
pub struct GermTable {
    n: usize,
    p: usize,
    elements: Vec<WElem>,
    // products[a * size + b] = Some(index) iff lengths add
    products: Vec<Option<usize>>,
}

impl GermTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WElem] {
        &self.elements
    }

    pub fn index_of(&self, a: &WElem) -> Option<usize> {
        // elements are in lexicographic order
        self.elements.binary_search(a).ok()
    }

    /// The partial product, defined iff the unreduced product stays in
    /// `{0, .., p-1}ⁿ` (equivalently, iff W-lengths add).
    pub fn partial(&self, a: &WElem, b: &WElem) -> Option<&WElem> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        self.products[i * self.elements.len() + j].map(|k| &self.elements[k])
    }

    pub fn defined_count(&self) -> usize {
        self.products.iter().filter(|e| e.is_some()).count()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn quotient_order(n: usize, p: usize, cap: u128) -> Result<usize> {
    let count = (p as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::TooLarge(format!("p^n overflows for p={p}, n={n}")))?;
    if count > cap {
        return Err(Error::TooLarge(format!(
            "quotient has {count} elements, cap is {cap}"
        )));
    }
    Ok(count as usize)
}

/// Builds the germ: `partial(a, b) = ν-coordinates of ν(a)ν(b)` when that
/// product stays within the divisor box, undefined otherwise.
pub fn germ_table(t: &RcTable, p: usize) -> Result<GermTable> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    let n = t.n();
    let size = quotient_order(n, p, 4096)?;
    let elements = w_elements(n, p);
    let index = |u: &MonCoord| -> Option<usize> {
        u.as_slice()
            .iter()
            .all(|&c| c < p)
            .then(|| elements.binary_search_by(|e| e.as_slice().cmp(u.as_slice())).ok())
            .flatten()
    };
    let mut products = vec![None; size * size];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let prod = monoid::mult(t, &a.to_mon(), &b.to_mon());
            products[i * size + j] = index(&prod);
        }
    }
    Ok(GermTable {
        n,
        p,
        elements,
        products,
    })
}

/// The Cayley graph of the germ: nodes are the elements of `W`; for each
/// node `a` and generator `y`, an edge labeled `y` to the partial product
/// `a · ȳ` whenever it is defined.
pub fn germ_cayley(t: &RcTable, p: usize) -> Result<LabeledDigraph> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    let n = t.n();
    quotient_order(n, p, 1 << 20)?;
    let elements = w_elements(n, p);
    let mut g = LabeledDigraph::new(n);
    for a in &elements {
        let u = a.to_mon();
        g.add_node(
            a.as_slice().to_vec(),
            monoid::normal_word(t, &u).render(n),
        );
    }
    let index = crate::graph::index_nodes(g.nodes());
    for a in &elements {
        let from = index[a.as_slice()];
        for y in 0..n {
            let prod = monoid::mult(t, &a.to_mon(), &MonCoord::unit(n, y));
            if prod.as_slice().iter().all(|&c| c < p) {
                let to = index[prod.as_slice()];
                g.add_edge(from, to, y);
            }
        }
    }
    g.canonicalize();
    Ok(g)
}

/// A relation `lhs = rhs`; an empty right side means `= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: GenWord,
    pub rhs: GenWord,
}

impl Relation {
    pub fn render(&self, n: usize) -> String {
        format!("{}={}", self.lhs.render(n), self.rhs.render(n))
    }
}

/// A finite presentation: generators `0..n` and a relation list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub n: usize,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Renders as `<a,b,c | ac=bb, ba=cc, cb=aa>`.
    pub fn render(&self) -> String {
        let gens = (0..self.n)
            .map(|i| letter(i, self.n))
            .collect::<Vec<_>>()
            .join(",");
        let rels = self
            .relations
            .iter()
            .map(|r| r.render(self.n))
            .collect::<Vec<_>>()
            .join(", ");
        if rels.is_empty() {
            format!("<{gens} | >")
        } else {
            format!("<{gens} | {rels}>")
        }
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(self.n)).collect()
    }
}

/// The defining presentation of `G` (and `M`): one relation
/// `x(x ⊳ y) = y(y ⊳ x)` per unordered pair of distinct generators.
///
/// Each relation is oriented with a power of a single generator on the
/// right (ties broken lexicographically) and the list is sorted, which
/// reproduces the conventional rendering `ac=bb, ba=cc, cb=aa` for the
/// 3-cycle table.
pub fn presentation_g(t: &RcTable) -> Presentation {
    let n = t.n();
    let mut relations = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let w1 = GenWord::new(vec![x, t.op(x, y)]);
            let w2 = GenWord::new(vec![y, t.op(y, x)]);
            if w1 == w2 {
                continue;
            }
            let (lhs, rhs) = match (w1.is_generator_power(), w2.is_generator_power()) {
                (true, false) => (w2, w1),
                (false, true) => (w1, w2),
                _ => {
                    if w1 <= w2 {
                        (w1, w2)
                    } else {
                        (w2, w1)
                    }
                }
            };
            let rel = Relation { lhs, rhs };
            if !relations.contains(&rel) {
                relations.push(rel);
            }
        }
    }
    relations.sort_by(|a, b| (&a.lhs, &a.rhs).cmp(&(&b.lhs, &b.rhs)));
    Presentation { n, relations }
}

/// The presentation of `W`: the relations of `G` plus `wₓ = 1` for each
/// generator, deduplicated as literal words only.
pub fn presentation_w(t: &RcTable, p: usize) -> Presentation {
    let mut pres = presentation_g(t);
    let mut seen: Vec<GenWord> = Vec::new();
    for x in 0..t.n() {
        let w = frozen_word(t, x, p);
        if !seen.contains(&w) {
            seen.push(w.clone());
            pres.relations.push(Relation {
                lhs: w,
                rhs: GenWord::empty(),
            });
        }
    }
    pres
}

/// A frozen relation together with the later frozen words that are cyclic
/// rotations of it. Cyclic duplicates are flagged, not removed: collapsing
/// them is group-level reasoning, which the artifact surfaces instead of
/// assuming.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenGroup {
    pub primary: GenWord,
    pub cyclic_duplicates: Vec<GenWord>,
}

/// Groups the frozen words `wₓ` (literal duplicates removed) by cyclic
/// equivalence, in generator order.
pub fn frozen_relation_groups(t: &RcTable, p: usize) -> Vec<FrozenGroup> {
    let mut groups: Vec<FrozenGroup> = Vec::new();
    let mut literal_seen: Vec<GenWord> = Vec::new();
    for x in 0..t.n() {
        let w = frozen_word(t, x, p);
        if literal_seen.contains(&w) {
            continue;
        }
        literal_seen.push(w.clone());
        let canon = w.rotations().into_iter().min().expect("nonempty rotations");
        if let Some(group) = groups.iter_mut().find(|g| {
            g.primary.rotations().into_iter().min().expect("nonempty") == canon
        }) {
            group.cyclic_duplicates.push(w);
        } else {
            groups.push(FrozenGroup {
                primary: w,
                cyclic_duplicates: Vec::new(),
            });
        }
    }
    groups
}

/// Per-claim report of the exact-sequence certification.
#[derive(Debug, Clone)]
pub struct ExactSequenceReport {
    /// `G → W` is a surjective homomorphism onto a group of `pⁿ` elements.
    pub surjection: Check,
    /// The kernel `(pℤ)ⁿ` is free abelian of rank n, generated by the
    /// frozen elements `x^[p]`.
    pub kernel: Check,
    /// Every congruence class has a representative in the monoid box
    /// `{0, .., p-1}ⁿ`.
    pub monoid_reps: Check,
    pub order: usize,
    pub kernel_rank: usize,
}

impl ExactSequenceReport {
    pub fn all_ok(&self) -> bool {
        self.surjection.ok && self.kernel.ok && self.monoid_reps.ok
    }

    pub fn first_witness(&self) -> Option<&str> {
        [&self.surjection, &self.kernel, &self.monoid_reps]
            .into_iter()
            .flat_map(|c| c.witnesses.first())
            .map(String::as_str)
            .next()
    }
}

/// Certifies the short exact sequence `1 → ℤⁿ → G → W → 1`.
pub fn verify_exact_sequence(t: &RcTable, p: usize) -> Result<ExactSequenceReport> {
    let n = t.n();
    let order = quotient_order(n, p, 1 << 20)?;
    let pi64 = p as i64;

    // (a) surjectivity onto p^n distinct classes, homomorphism property on
    // a grid around the origin
    let mut surj_witnesses = Vec::new();
    let mut seen = HashSet::new();
    for w in w_elements(n, p) {
        seen.insert(project_w(p, &w.to_grp()));
    }
    if seen.len() != order {
        surj_witnesses.push(format!(
            "only {} of {order} classes realized by residue vectors",
            seen.len()
        ));
    }
    let grid: Vec<GrpCoord> = grid_coords(n, &[-1, 0, 1, pi64, pi64 + 1]);
    'hom: for u in &grid {
        for v in &grid {
            let lhs = project_w(p, &g_mult(t, p, u, v));
            let rhs = w_mult(t, p, &project_w(p, u), &project_w(p, v));
            if lhs != rhs {
                surj_witnesses.push(format!(
                    "projection is not multiplicative at u={}, v={}",
                    u.render(),
                    v.render()
                ));
                break 'hom;
            }
        }
    }

    // (b) on (pℤ)ⁿ the product is vector addition, so the kernel is the
    // free abelian group on the frozen elements
    let mut kernel_witnesses = Vec::new();
    let small: Vec<GrpCoord> = grid_coords(n, &[-1, 0, 1]);
    'kernel: for a in &small {
        for b in &small {
            let pa = GrpCoord(a.as_slice().iter().map(|&c| c * pi64).collect());
            let pb = GrpCoord(b.as_slice().iter().map(|&c| c * pi64).collect());
            if g_mult(t, p, &pa, &pb) != pa.add(&pb) {
                kernel_witnesses.push(format!(
                    "product on (pZ)^n is not addition at {} · {}",
                    pa.render(),
                    pb.render()
                ));
                break 'kernel;
            }
        }
    }
    for x in 0..n {
        let fx = GrpCoord::from_mon(&monoid::frozen_coord(n, x, p));
        if project_w(p, &fx) != WElem::identity(n) {
            kernel_witnesses.push(format!(
                "frozen element {} does not project to the identity",
                fx.render()
            ));
        }
    }

    // (c) every class has a representative inside the divisor box
    let mut rep_witnesses = Vec::new();
    let mut classes = HashSet::new();
    for w in w_elements(n, p) {
        classes.insert(project_w(p, &w.to_grp()));
    }
    if classes.len() != order {
        rep_witnesses.push(format!(
            "box representatives cover {} of {order} classes",
            classes.len()
        ));
    }

    Ok(ExactSequenceReport {
        surjection: Check::from_witnesses(surj_witnesses),
        kernel: Check::from_witnesses(kernel_witnesses),
        monoid_reps: Check::from_witnesses(rep_witnesses),
        order,
        kernel_rank: n,
    })
}

/// All vectors with entries drawn from the given values, thinned by a
/// deterministic stride once the full grid exceeds the cap.
fn grid_coords(n: usize, values: &[i64]) -> Vec<GrpCoord> {
    const CAP: u128 = 700;
    let base = values.len() as u128;
    let total = base
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX)
        .min(CAP * CAP);
    let stride = total.div_ceil(CAP).max(1);
    let mut out = Vec::new();
    let mut k = 0u128;
    while k < total {
        let mut rest = k;
        let mut v = vec![0i64; n];
        for slot in v.iter_mut().rev() {
            *slot = values[(rest % base) as usize];
            rest /= base;
        }
        out.push(GrpCoord(v));
        k += stride;
    }
    if !out.contains(&GrpCoord::zero(n)) {
        out.push(GrpCoord::zero(n));
    }
    out
}

/// True when every element of `W` is reachable from the identity by
/// defined germ products with generator classes.
pub fn germ_generates(t: &RcTable, p: usize) -> Result<bool> {
    let n = t.n();
    let order = quotient_order(n, p, 1 << 20)?;
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let id = WElem::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(a) = queue.pop_front() {
        for y in 0..n {
            let prod = monoid::mult(t, &a.to_mon(), &MonCoord::unit(n, y));
            if prod.as_slice().iter().all(|&c| c < p) {
                let next = WElem::from_mon(&prod, p);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.len() == order)
}

/// Evaluates a word in `G` by successive right-multiplication by
/// generators, starting at the identity.
pub fn eval_word_g(t: &RcTable, p: usize, w: &GenWord) -> GrpCoord {
    let n = t.n();
    let mut acc = GrpCoord::zero(n);
    for &x in w.letters() {
        acc = g_mult(t, p, &acc, &GrpCoord::unit(n, x));
    }
    acc
}

/// Evaluates a word in `W`.
pub fn eval_word_w(t: &RcTable, p: usize, w: &GenWord) -> WElem {
    project_w(p, &eval_word_g(t, p, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::frozen_coord;
    use crate::solution::{builtin, Builtin};

    fn cyclic3() -> RcTable {
        builtin(Builtin::Cycle, 3).unwrap()
    }

    fn involution2() -> RcTable {
        builtin(Builtin::Involution, 2).unwrap()
    }

    #[test]
    fn g_mult_matches_monoid_on_nonnegatives() {
        let t = cyclic3();
        for u in monoid::coords_up_to_degree(3, 3) {
            for v in monoid::coords_up_to_degree(3, 3) {
                let g = g_mult(&t, 3, &GrpCoord::from_mon(&u), &GrpCoord::from_mon(&v));
                assert_eq!(g.to_mon().unwrap(), monoid::mult(&t, &u, &v));
            }
        }
    }

    #[test]
    fn g_mult_identity_and_inverse() {
        let t = cyclic3();
        let p = 3;
        let zero = GrpCoord::zero(3);
        for u in grid_coords(3, &[-2, -1, 0, 1, 2]) {
            assert_eq!(g_mult(&t, p, &u, &zero), u);
            assert_eq!(g_mult(&t, p, &zero, &u), u);
            let inv = g_inverse(&t, p, &u);
            assert!(g_mult(&t, p, &u, &inv).is_zero(), "u={u:?}");
            assert!(g_mult(&t, p, &inv, &u).is_zero(), "u={u:?}");
        }
    }

    #[test]
    fn frozen_products_add_symmetrically() {
        let t = cyclic3();
        let p = 3;
        for x in 0..3 {
            for y in 0..3 {
                let fx = GrpCoord::from_mon(&frozen_coord(3, x, p));
                let fy = GrpCoord::from_mon(&frozen_coord(3, y, p));
                let prod = g_mult(&t, p, &fx, &fy);
                assert_eq!(prod, fx.add(&fy));
                assert_eq!(prod, g_mult(&t, p, &fy, &fx));
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let t = cyclic3();
        let p = 3;
        let u = GrpCoord::new(vec![2, 0, 1]);
        assert_eq!(decompose(&t, p, &u).unwrap(), (0, MonCoord::new(vec![2, 0, 1])));
        let v = GrpCoord::new(vec![-1, -1, -1]);
        assert_eq!(
            decompose(&t, p, &v).unwrap(),
            (-1, MonCoord::new(vec![5, 5, 5]))
        );
        let w = GrpCoord::new(vec![6, 6, 6]);
        assert_eq!(decompose(&t, p, &w).unwrap(), (1, MonCoord::zero(3)));
        assert!(decompose(&builtin(Builtin::Trivial, 2).unwrap(), 1, &GrpCoord::zero(2)).is_err());
    }

    #[test]
    fn decompose_recombines() {
        let t = cyclic3();
        let p = 3;
        let q = (p * (p - 1)) as i64;
        for u in grid_coords(3, &[-7, -1, 0, 2, 6, 13]) {
            let (e, h) = decompose(&t, p, &u).unwrap();
            let delta_pe = GrpCoord::new(vec![q * e; 3]);
            assert_eq!(g_mult(&t, p, &delta_pe, &GrpCoord::from_mon(&h)), u);
            assert!(h.as_slice().iter().min().unwrap() < &(q as usize));
        }
    }

    #[test]
    fn projection_examples() {
        let p = 3;
        assert_eq!(project_w(p, &GrpCoord::zero(3)), WElem::identity(3));
        assert_eq!(
            project_w(p, &GrpCoord::from_mon(&frozen_coord(3, 1, p))),
            WElem::identity(3)
        );
        assert_eq!(
            project_w(p, &GrpCoord::new(vec![2, 2, 2])),
            WElem::new(vec![2, 2, 2], p)
        );
        assert_eq!(
            project_w(p, &GrpCoord::new(vec![-1, 4, 3])),
            WElem::new(vec![2, 1, 0], p)
        );
    }

    #[test]
    fn w_of_involution_is_cyclic_of_order_four() {
        let t = involution2();
        let p = 2;
        let a = WElem::new(vec![1, 0], p);
        let a2 = w_mult(&t, p, &a, &a);
        assert_eq!(a2, WElem::new(vec![1, 1], p));
        let a3 = w_mult(&t, p, &a2, &a);
        assert_eq!(a3, WElem::new(vec![0, 1], p));
        let a4 = w_mult(&t, p, &a3, &a);
        assert_eq!(a4, WElem::identity(2));
        // all four elements are powers of a, so W is cyclic of order 4
        let powers: HashSet<WElem> = [a.clone(), a2, a3, a4].into_iter().collect();
        assert_eq!(powers.len(), 4);
    }

    #[test]
    fn w_axioms_hold_on_the_full_cyclic3_table() {
        let t = cyclic3();
        let p = 3;
        let elems = w_elements(3, p);
        assert_eq!(elems.len(), 27);
        let id = WElem::identity(3);
        for a in &elems {
            assert_eq!(&w_mult(&t, p, a, &id), a);
            assert_eq!(&w_mult(&t, p, &id, a), a);
            let inv = w_inverse(&t, p, a);
            assert_eq!(w_mult(&t, p, a, &inv), id);
            assert_eq!(w_mult(&t, p, &inv, a), id);
        }
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let lhs = w_mult(&t, p, &w_mult(&t, p, a, b), c);
                    let rhs = w_mult(&t, p, a, &w_mult(&t, p, b, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn trivial_table_gives_trivial_w_and_additive_g() {
        let t = builtin(Builtin::Trivial, 3).unwrap();
        let p = 1;
        assert_eq!(w_elements(3, p).len(), 1);
        for u in grid_coords(3, &[-2, 0, 3]) {
            for v in grid_coords(3, &[-1, 0, 2]) {
                assert_eq!(g_mult(&t, p, &u, &v), u.add(&v));
            }
        }
    }

    #[test]
    fn germ_table_of_cyclic3() {
        let t = cyclic3();
        let germ = germ_table(&t, 3).unwrap();
        assert_eq!(germ.order(), 27);
        let zero = WElem::identity(3);
        let ea = WElem::new(vec![1, 0, 0], 3);
        let ec = WElem::new(vec![0, 0, 1], 3);
        for b in germ.elements() {
            assert_eq!(germ.partial(&zero, b), Some(b));
        }
        assert_eq!(
            germ.partial(&ea, &ec),
            Some(&WElem::new(vec![1, 1, 0], 3))
        );
        let delta = WElem::new(vec![2, 2, 2], 3);
        for x in 0..3 {
            let ex = WElem::new(
                (0..3).map(|i| usize::from(i == x)).collect(),
                3,
            );
            assert_eq!(germ.partial(&delta, &ex), None);
        }
        // definedness criterion: lengths add
        for a in germ.elements() {
            for b in germ.elements() {
                if let Some(c) = germ.partial(a, b) {
                    assert_eq!(c.length(), a.length() + b.length());
                }
            }
        }
    }

    #[test]
    fn germ_requires_class_two() {
        let t = builtin(Builtin::Trivial, 2).unwrap();
        assert!(germ_table(&t, 1).is_err());
        assert!(germ_cayley(&t, 1).is_err());
    }

    #[test]
    fn germ_cayley_equals_divisor_lattice() {
        for (t, p) in [(cyclic3(), 3), (involution2(), 2)] {
            let cayley = germ_cayley(&t, p).unwrap();
            let hasse = monoid::divisor_lattice(&t, p).unwrap();
            assert_eq!(cayley, hasse);
        }
    }

    #[test]
    fn involution_cayley_is_a_labeled_square() {
        let g = germ_cayley(&involution2(), 2).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(
            g.out_edges(&[0, 0]),
            vec![(0, vec![1, 0]), (1, vec![0, 1])]
        );
        assert_eq!(g.out_edges(&[1, 0]), vec![(0, vec![1, 1])]);
        assert_eq!(g.out_edges(&[0, 1]), vec![(1, vec![1, 1])]);
        assert_eq!(g.out_edges(&[1, 1]), vec![]);
    }

    #[test]
    fn germ_reaches_every_element() {
        assert!(germ_generates(&cyclic3(), 3).unwrap());
        assert!(germ_generates(&involution2(), 2).unwrap());
    }

    #[test]
    fn presentation_of_cyclic3() {
        let pres = presentation_g(&cyclic3());
        assert_eq!(
            pres.relation_strings(),
            vec!["ac=bb", "ba=cc", "cb=aa"]
        );
        assert_eq!(pres.render(), "<a,b,c | ac=bb, ba=cc, cb=aa>");
    }

    #[test]
    fn presentation_of_trivial_and_involution() {
        let triv = presentation_g(&builtin(Builtin::Trivial, 2).unwrap());
        assert_eq!(triv.relation_strings(), vec!["ab=ba"]);
        let inv = presentation_g(&involution2());
        assert_eq!(inv.relation_strings(), vec!["aa=bb"]);
    }

    #[test]
    fn presentation_w_appends_frozen_relations() {
        let pres = presentation_w(&cyclic3(), 3);
        assert_eq!(
            pres.relation_strings(),
            vec!["ac=bb", "ba=cc", "cb=aa", "abc=1", "bca=1", "cab=1"]
        );
        let groups = frozen_relation_groups(&cyclic3(), 3);
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].primary.render(3), "abc");
        assert_eq!(
            groups[0]
                .cyclic_duplicates
                .iter()
                .map(|w| w.render(3))
                .collect::<Vec<_>>(),
            vec!["bca", "cab"]
        );

        let inv = presentation_w(&involution2(), 2);
        assert_eq!(inv.relation_strings(), vec!["aa=bb", "ab=1", "ba=1"]);

        let triv = presentation_w(&builtin(Builtin::Trivial, 2).unwrap(), 1);
        assert_eq!(triv.relation_strings(), vec!["ab=ba", "a=1", "b=1"]);
    }

    #[test]
    fn presentation_relations_hold_in_coordinates() {
        for (t, p) in [(cyclic3(), 3), (involution2(), 2)] {
            for rel in &presentation_g(&t).relations {
                assert_eq!(
                    eval_word_g(&t, p, &rel.lhs),
                    eval_word_g(&t, p, &rel.rhs)
                );
            }
            for rel in &presentation_w(&t, p).relations {
                assert_eq!(
                    eval_word_w(&t, p, &rel.lhs),
                    eval_word_w(&t, p, &rel.rhs)
                );
            }
        }
    }

    #[test]
    fn exact_sequence_reports() {
        let rep = verify_exact_sequence(&cyclic3(), 3).unwrap();
        assert!(rep.all_ok(), "{rep:?}");
        assert_eq!(rep.order, 27);
        assert_eq!(rep.kernel_rank, 3);

        let triv = builtin(Builtin::Trivial, 3).unwrap();
        let rep = verify_exact_sequence(&triv, 1).unwrap();
        assert!(rep.all_ok());
        assert_eq!(rep.order, 1);
        assert_eq!(rep.kernel_rank, 3);
    }
}
