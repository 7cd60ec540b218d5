//! The structure monoid realized on `ℕⁿ` coordinates.
//!
//! Elements of the monoid are represented by their coordinate vectors
//! under the degree-preserving bijection `ν: ℕⁿ → M` with
//! `ν(u + eₓ) = ν(u) · π(u)(x)` for a permutation `π(u)` of the
//! generators. All monoid-level statements become coordinate identities:
//! the product is `u + π(u)⁻¹[v]`, left-divisibility is the componentwise
//! order, and the Garside element `Δ` sits at `(p-1, .., p-1)`.

use crate::error::{Error, Result};
use crate::graph::LabeledDigraph;
use crate::perm::Perm;
use crate::rcq::{sigma_word, RcTable};
use crate::word::GenWord;

/// Coordinates of a monoid element: entry `x` is the number of occurrences
/// of generator `x` in any expression of the element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonCoord(Vec<usize>);

impl MonCoord {
    pub fn new(v: Vec<usize>) -> Self {
        MonCoord(v)
    }

    pub fn zero(n: usize) -> Self {
        MonCoord(vec![0; n])
    }

    /// The basis vector `eₓ`, the coordinates of generator `x`.
    pub fn unit(n: usize, x: usize) -> Self {
        assert!(x < n, "generator out of range");
        let mut v = vec![0; n];
        v[x] = 1;
        MonCoord(v)
    }

    pub fn constant(n: usize, c: usize) -> Self {
        MonCoord(vec![c; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Total degree `|u|`, the generator-length of the element.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MonCoord) -> MonCoord {
        assert_eq!(self.n(), other.n(), "size mismatch");
        MonCoord(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; panics unless `other` divides `self`.
    pub fn sub(&self, other: &MonCoord) -> MonCoord {
        assert!(divides(other, self), "subtraction would go negative");
        MonCoord(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The canonical decomposition: each generator repeated its exponent,
    /// in increasing index order.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for (x, &c) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(x, c));
        }
        out
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

/// All coordinate vectors in the box `{0, .., bound}ⁿ`, in lexicographic
/// order.
pub fn box_coords(n: usize, bound: usize) -> Vec<MonCoord> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        out.push(MonCoord(cur.clone()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound {
                cur[i] += 1;
                for c in &mut cur[i + 1..] {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// All coordinate vectors of total degree at most `max_degree`.
pub fn coords_up_to_degree(n: usize, max_degree: usize) -> Vec<MonCoord> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(cur: &mut Vec<usize>, i: usize, left: usize, out: &mut Vec<MonCoord>) {
        if i == cur.len() {
            out.push(MonCoord::new(cur.clone()));
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(cur, i + 1, left - c, out);
        }
        cur[i] = 0;
    }
    rec(&mut cur, 0, max_degree, &mut out);
    out.sort();
    out
}

/// The cocycle `π(u)`, computed by folding the one-letter case over a
/// decomposition of `u`: `π(∅) = id`, `π(eₓ)(y) = x ⊳ y`, and
/// `π(u + eₓ) = π(e_{π(u)(x)}) ∘ π(u)`.
///
/// The result does not depend on the decomposition order; the verification
/// suite checks this on every instance it runs on.
pub fn pi_of(t: &RcTable, u: &MonCoord) -> Perm {
    pi_of_letters(t, u.letters().into_iter())
}

pub(crate) fn pi_of_letters(t: &RcTable, letters: impl Iterator<Item = usize>) -> Perm {
    let mut pi = Perm::identity(t.n());
    for x in letters {
        let z = pi.apply(x);
        pi = t.left_translation(z).compose(&pi);
    }
    pi
}

/// The product in coordinates: `ν(u)·ν(v)` has coordinates
/// `u + π(u)⁻¹[v]`. Total degree is additive.
pub fn mult(t: &RcTable, u: &MonCoord, v: &MonCoord) -> MonCoord {
    let moved = pi_of(t, u).pull_back(v.as_slice());
    u.add(&MonCoord(moved))
}

/// The normal-form word of `ν(u)`: the nested-product word on the
/// canonical decomposition of `u`.
pub fn normal_word(t: &RcTable, u: &MonCoord) -> GenWord {
    let letters = u.letters();
    if letters.is_empty() {
        return GenWord::empty();
    }
    sigma_word(t, &letters).expect("nonempty tuple")
}

/// Left-divisibility `ν(u) ⊑ ν(v)`, equivalently the componentwise order.
pub fn divides(u: &MonCoord, v: &MonCoord) -> bool {
    assert_eq!(u.n(), v.n(), "size mismatch");
    u.as_slice().iter().zip(v.as_slice()).all(|(a, b)| a <= b)
}

/// Left-gcd and right-lcm coordinates: componentwise min and max.
pub fn lattice_ops(u: &MonCoord, v: &MonCoord) -> (MonCoord, MonCoord) {
    assert_eq!(u.n(), v.n(), "size mismatch");
    let meet = u
        .as_slice()
        .iter()
        .zip(v.as_slice())
        .map(|(a, b)| *a.min(b))
        .collect();
    let join = u
        .as_slice()
        .iter()
        .zip(v.as_slice())
        .map(|(a, b)| *a.max(b))
        .collect();
    (MonCoord(meet), MonCoord(join))
}

/// Coordinates of the Garside element `Δ = ν(δ^{p-1})`, `δ` the product
/// of all generators: the constant vector `(p-1, .., p-1)`.
pub fn delta_coord(t: &RcTable, p: usize) -> Result<MonCoord> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    Ok(MonCoord::constant(t.n(), p - 1))
}

/// Coordinates of the frozen element `x^[p] = ν(xᵖ)`.
pub fn frozen_coord(n: usize, x: usize, p: usize) -> MonCoord {
    assert!(x < n, "generator out of range");
    let mut v = vec![0; n];
    v[x] = p;
    MonCoord(v)
}

/// The Hasse diagram of `Div(Δ)` under left-divisibility: nodes are all
/// `u ∈ {0, .., p-1}ⁿ`, with an edge `u → u + eₓ` labeled by the
/// generator `π(u)(x)` by which `ν(u + eₓ)` right-extends `ν(u)`.
pub fn divisor_lattice(t: &RcTable, p: usize) -> Result<LabeledDigraph> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    let n = t.n();
    let count = (p as u128).checked_pow(n as u32).ok_or_else(|| {
        Error::TooLarge(format!("p^n overflows for p={p}, n={n}"))
    })?;
    if count > 1 << 20 {
        return Err(Error::TooLarge(format!("divisor lattice has {count} nodes")));
    }

    let mut g = LabeledDigraph::new(n);
    let coords = box_coords(n, p - 1);
    for u in &coords {
        g.add_node(u.as_slice().to_vec(), normal_word(t, u).render(n));
    }
    let index = crate::graph::index_nodes(g.nodes());
    for u in &coords {
        let from = index[u.as_slice()];
        let pi = pi_of(t, u);
        for x in 0..n {
            if u.get(x) < p - 1 {
                let to_coords = u.add(&MonCoord::unit(n, x));
                let to = index[to_coords.as_slice()];
                g.add_edge(from, to, pi.apply(x));
            }
        }
    }
    g.canonicalize();
    Ok(g)
}

/// The right complement under the duality `g ↦ h` with `gh = Δ`:
/// `h = π(g)[Δ - g]`.
pub fn complement(t: &RcTable, p: usize, g: &MonCoord) -> Result<MonCoord> {
    let delta = delta_coord(t, p)?;
    if !divides(g, &delta) {
        return Err(Error::NotADivisor(g.render()));
    }
    let rest = delta.sub(g);
    Ok(MonCoord(pi_of(t, g).push_forward(rest.as_slice())))
}

/// Whether `Δᵖ`, at coordinates `p(p-1)·(1, .., 1)`, commutes with every
/// generator. Sufficient for centrality since the generators generate.
pub fn check_delta_p_central(t: &RcTable, p: usize) -> Result<bool> {
    if p < 2 {
        return Err(Error::UnsupportedClass { p });
    }
    let n = t.n();
    let c = MonCoord::constant(n, p * (p - 1));
    Ok((0..n).all(|x| {
        let e = MonCoord::unit(n, x);
        mult(t, &c, &e) == mult(t, &e, &c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::{builtin, Builtin};

    fn cyclic3() -> RcTable {
        builtin(Builtin::Cycle, 3).unwrap()
    }

    fn e(n: usize, x: usize) -> MonCoord {
        MonCoord::unit(n, x)
    }

    #[test]
    fn pi_of_zero_is_identity() {
        assert!(pi_of(&cyclic3(), &MonCoord::zero(3)).is_identity());
    }

    #[test]
    fn pi_of_generator_is_left_translation() {
        let t = cyclic3();
        let pi = pi_of(&t, &e(3, 0));
        for y in 0..3 {
            assert_eq!(pi.apply(y), (y + 1) % 3);
        }
    }

    #[test]
    fn pi_is_identity_on_multiples_of_class() {
        let t = cyclic3();
        for u in [
            MonCoord::new(vec![3, 0, 0]),
            MonCoord::new(vec![3, 3, 0]),
            MonCoord::new(vec![0, 3, 3]),
            MonCoord::new(vec![3, 3, 3]),
            MonCoord::new(vec![6, 3, 0]),
        ] {
            assert!(pi_of(&t, &u).is_identity(), "pi({u:?}) != id");
        }
    }

    #[test]
    fn mult_with_zero_is_identity() {
        let t = cyclic3();
        let u = MonCoord::new(vec![2, 1, 0]);
        assert_eq!(mult(&t, &u, &MonCoord::zero(3)), u);
        assert_eq!(mult(&t, &MonCoord::zero(3), &u), u);
    }

    #[test]
    fn cyclic_relation_ac_equals_bb_in_coordinates() {
        let t = cyclic3();
        let ac = mult(&t, &e(3, 0), &e(3, 2));
        let bb = mult(&t, &e(3, 1), &e(3, 1));
        assert_eq!(ac, MonCoord::new(vec![1, 1, 0]));
        assert_eq!(ac, bb);
    }

    #[test]
    fn sixth_power_of_a_is_delta() {
        let t = cyclic3();
        let a = e(3, 0);
        let mut acc = MonCoord::zero(3);
        for _ in 0..6 {
            acc = mult(&t, &acc, &a);
        }
        assert_eq!(acc, MonCoord::new(vec![2, 2, 2]));
        assert_eq!(acc, delta_coord(&t, 3).unwrap());
    }

    #[test]
    fn normal_words() {
        let t = cyclic3();
        assert_eq!(normal_word(&t, &e(3, 1)).render(3), "b");
        assert_eq!(normal_word(&t, &MonCoord::zero(3)).render(3), "1");
        // canonical decomposition a·b·c: Σ₃(a,b,c) = a · (a⊳b) · Π₃ = acb
        assert_eq!(normal_word(&t, &MonCoord::new(vec![1, 1, 1])).render(3), "acb");
        assert_eq!(
            normal_word(&t, &MonCoord::new(vec![2, 2, 2])).render(3),
            "ababab"
        );
    }

    #[test]
    fn divisibility_is_componentwise() {
        let u = MonCoord::new(vec![1, 1, 0]);
        let v = MonCoord::new(vec![2, 2, 2]);
        assert!(divides(&MonCoord::zero(3), &v));
        assert!(divides(&u, &v));
        assert!(!divides(&MonCoord::new(vec![3, 0, 0]), &v));
    }

    #[test]
    fn divides_matches_existence_of_right_factor() {
        let t = cyclic3();
        let small = coords_up_to_degree(3, 3);
        for u in &small {
            for v in &small {
                let found = small
                    .iter()
                    .filter(|w| w.degree() + u.degree() == v.degree())
                    .any(|w| &mult(&t, u, w) == v);
                assert_eq!(divides(u, v), found, "u={u:?} v={v:?}");
            }
        }
    }

    #[test]
    fn lattice_ops_bound_the_inputs() {
        let _t = cyclic3();
        let a = e(3, 0);
        let c = e(3, 2);
        let (meet, join) = lattice_ops(&a, &c);
        assert_eq!(meet, MonCoord::zero(3));
        assert_eq!(join, MonCoord::new(vec![1, 0, 1]));
        // the join of two distinct generators has degree 2: their right-lcm
        assert_eq!(join.degree(), 2);
        // minimality among degree-2 common upper bounds, by exhaustion
        for w in coords_up_to_degree(3, 2) {
            if w.degree() == 2 && divides(&a, &w) && divides(&c, &w) {
                assert_eq!(w, join);
            }
        }
        let u = MonCoord::new(vec![2, 1, 0]);
        let (m, j) = lattice_ops(&u, &u);
        assert_eq!(m, u);
        assert_eq!(j, u);
    }

    #[test]
    fn delta_requires_class_two() {
        let t = builtin(Builtin::Trivial, 2).unwrap();
        assert!(matches!(
            delta_coord(&t, 1),
            Err(Error::UnsupportedClass { p: 1 })
        ));
        let inv = builtin(Builtin::Involution, 2).unwrap();
        assert_eq!(delta_coord(&inv, 2).unwrap(), MonCoord::new(vec![1, 1]));
    }

    #[test]
    fn divisor_lattice_of_cyclic3() {
        let t = cyclic3();
        let g = divisor_lattice(&t, 3).unwrap();
        assert_eq!(g.node_count(), 27);
        assert_eq!(g.edge_count(), 54);
        // outgoing edges of node a = (1,0,0), labels are f(x)
        let mut out = g.out_edges(&[1, 0, 0]);
        out.sort();
        assert_eq!(
            out,
            vec![
                (0, vec![1, 0, 1]), // label a to a² = (1,0,1)
                (1, vec![2, 0, 0]), // label b to ab = (2,0,0)
                (2, vec![1, 1, 0]), // label c to b² = (1,1,0)
            ]
        );
    }

    #[test]
    fn complement_pairs_multiply_to_delta() {
        let t = cyclic3();
        let p = 3;
        let delta = delta_coord(&t, p).unwrap();
        assert_eq!(complement(&t, p, &MonCoord::zero(3)).unwrap(), delta);
        assert_eq!(complement(&t, p, &delta).unwrap(), MonCoord::zero(3));
        let mut images = std::collections::HashSet::new();
        for g in box_coords(3, p - 1) {
            let h = complement(&t, p, &g).unwrap();
            assert_eq!(mult(&t, &g, &h), delta, "g={g:?}");
            images.insert(h);
        }
        // duality is a bijection from divisors to divisors
        assert_eq!(images.len(), 27);
        assert!(complement(&t, p, &MonCoord::new(vec![3, 0, 0])).is_err());
    }

    #[test]
    fn delta_power_is_central() {
        assert!(check_delta_p_central(&cyclic3(), 3).unwrap());
        let inv = builtin(Builtin::Involution, 2).unwrap();
        assert!(check_delta_p_central(&inv, 2).unwrap());
    }

    #[test]
    fn frozen_elements_commute_and_absorb() {
        let t = cyclic3();
        let p = 3;
        for x in 0..3 {
            for y in 0..3 {
                let fx = frozen_coord(3, x, p);
                let fy = frozen_coord(3, y, p);
                assert_eq!(mult(&t, &fx, &fy), mult(&t, &fy, &fx));
            }
        }
        // ν(xᵖ u) = x^[p] ν(u): multiplication by a frozen element is
        // plain addition
        for v in coords_up_to_degree(3, 3) {
            for x in 0..3 {
                let fx = frozen_coord(3, x, p);
                assert_eq!(mult(&t, &fx, &v), fx.add(&v));
            }
        }
        // the normal word of a frozen element is the frozen word itself
        assert_eq!(
            normal_word(&t, &frozen_coord(3, 0, p)).render(3),
            "abc"
        );
    }

    #[test]
    fn degree_is_additive() {
        let t = cyclic3();
        for u in coords_up_to_degree(3, 3) {
            for v in coords_up_to_degree(3, 2) {
                assert_eq!(mult(&t, &u, &v).degree(), u.degree() + v.degree());
            }
        }
    }

    #[test]
    fn box_and_degree_enumerations() {
        assert_eq!(box_coords(3, 2).len(), 27);
        assert_eq!(coords_up_to_degree(3, 3).len(), 20);
        let boxed = box_coords(2, 1);
        assert_eq!(
            boxed,
            vec![
                MonCoord::new(vec![0, 0]),
                MonCoord::new(vec![0, 1]),
                MonCoord::new(vec![1, 0]),
                MonCoord::new(vec![1, 1]),
            ]
        );
    }
}
