//! RC-quasigroup calculus: the RC-law, the maps Psi and Phi, the nested
//! product recursion, the class, and the frozen words.
//!
//! An RC-system is a set `X` with a binary operation `x ⊳ y` obeying
//! `(x ⊳ y) ⊳ (x ⊳ z) = (y ⊳ x) ⊳ (y ⊳ z)`. It is an RC-quasigroup when
//! every left-translation `y ↦ x ⊳ y` is a bijection, and bijective when
//! `Ψ: (x, y) ↦ (x ⊳ y, y ⊳ x)` is a bijection of `X²`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::{letter, GenWord};

/// The binary operation `x ⊳ y` on `X = {0, .., n-1}` as an `n x n` table.
///
/// Row index is the left operand: `op(x, y) = x ⊳ y`. The constructor only
/// checks shape and range; the semantic laws are checked by [`validate_rc`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RcTable {
    n: usize,
    op: Vec<usize>,
}

impl RcTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        let mut op = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry op[{x}][{y}] = {v} out of range 0..{n}"
                    )));
                }
                op.push(v);
            }
        }
        Ok(RcTable { n, op })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x ⊳ y`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.op[x * self.n..(x + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    /// The left-translation `y ↦ x ⊳ y` as a permutation.
    ///
    /// Panics if row `x` is not a permutation; callers run [`validate_rc`]
    /// first.
    pub fn left_translation(&self, x: usize) -> Perm {
        Perm::new(self.row(x).to_vec()).expect("left-translation row is a permutation")
    }

    /// Inverse lookup of the left-translation: the unique `y` with
    /// `x ⊳ y = z`, or `None` when row `x` is not bijective.
    pub fn left_translation_inv(&self, x: usize, z: usize) -> Option<usize> {
        let mut found = None;
        for y in 0..self.n {
            if self.op(x, y) == z {
                if found.is_some() {
                    return None;
                }
                found = Some(y);
            }
        }
        found
    }

    /// Conjugate table under a relabeling `rho` of `X`:
    /// `op'(x, y) = rho⁻¹(op(rho(x), rho(y)))`.
    pub fn relabel(&self, rho: &Perm) -> RcTable {
        assert_eq!(rho.len(), self.n, "relabeling size mismatch");
        let inv = rho.inverse();
        let mut op = Vec::with_capacity(self.n * self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                op.push(inv.apply(self.op(rho.apply(x), rho.apply(y))));
            }
        }
        RcTable { n: self.n, op }
    }
}

/// Outcome of one validation check: a flag plus counterexample witnesses
/// (non-empty exactly when the flag is false).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            ok: true,
            witnesses: Vec::new(),
        }
    }

    pub fn from_witnesses(witnesses: Vec<String>) -> Self {
        Check {
            ok: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Validation flags for an [`RcTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcReport {
    /// `(x ⊳ y) ⊳ (x ⊳ z) = (y ⊳ x) ⊳ (y ⊳ z)` over all triples.
    pub rc_law: Check,
    /// Every left-translation is a bijection of `X`.
    pub rows_bijective: Check,
    /// `Ψ: (x, y) ↦ (x ⊳ y, y ⊳ x)` is a bijection of `X²`.
    pub psi_bijective: Check,
}

impl RcReport {
    pub fn all_ok(&self) -> bool {
        self.rc_law.ok && self.rows_bijective.ok && self.psi_bijective.ok
    }

    pub fn first_witness(&self) -> Option<&str> {
        [&self.rc_law, &self.rows_bijective, &self.psi_bijective]
            .into_iter()
            .flat_map(|c| c.witnesses.first())
            .map(String::as_str)
            .next()
    }
}

/// Checks the RC-law over all `n³` triples, row-bijectivity, and the
/// bijectivity of `Ψ` over `X²`.
pub fn validate_rc(t: &RcTable) -> RcReport {
    let n = t.n();
    const MAX_WITNESSES: usize = 8;

    let mut rc_witnesses = Vec::new();
    'rc: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t.op(t.op(x, y), t.op(x, z));
                let rhs = t.op(t.op(y, x), t.op(y, z));
                if lhs != rhs {
                    rc_witnesses.push(format!(
                        "rc-law fails at (x,y,z)=({x},{y},{z}): lhs={lhs}, rhs={rhs}"
                    ));
                    if rc_witnesses.len() >= MAX_WITNESSES {
                        break 'rc;
                    }
                }
            }
        }
    }

    let mut row_witnesses = Vec::new();
    for x in 0..n {
        let mut seen = vec![false; n];
        for y in 0..n {
            let v = t.op(x, y);
            if seen[v] {
                row_witnesses.push(format!(
                    "left-translation of {x} is not bijective: value {v} repeats"
                ));
                break;
            }
            seen[v] = true;
        }
    }

    let mut psi_witnesses = Vec::new();
    let mut image_of: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let img = (t.op(x, y), t.op(y, x));
            if let Some(&prev) = image_of.get(&img) {
                if psi_witnesses.len() < MAX_WITNESSES {
                    psi_witnesses.push(format!(
                        "psi collides: ({},{}) and ({x},{y}) both map to ({},{})",
                        prev.0, prev.1, img.0, img.1
                    ));
                }
            } else {
                image_of.insert(img, (x, y));
            }
        }
    }

    RcReport {
        rc_law: Check::from_witnesses(rc_witnesses),
        rows_bijective: Check::from_witnesses(row_witnesses),
        psi_bijective: Check::from_witnesses(psi_witnesses),
    }
}

fn pi_rec(t: &RcTable, xs: &[usize], memo: &mut HashMap<Vec<usize>, usize>) -> usize {
    if xs.len() == 1 {
        return xs[0];
    }
    if let Some(&v) = memo.get(xs) {
        return v;
    }
    let r = xs.len();
    let a = pi_rec(t, &xs[..r - 1], memo);
    let mut right = xs[..r - 2].to_vec();
    right.push(xs[r - 1]);
    let b = pi_rec(t, &right, memo);
    let v = t.op(a, b);
    memo.insert(xs.to_vec(), v);
    v
}

/// The nested product `Πᵣ(x₁, .., xᵣ)`, defined by `Π₁(x₁) = x₁` and
/// `Πᵣ(x₁, .., xᵣ) = Πᵣ₋₁(x₁, .., xᵣ₋₁) ⊳ Πᵣ₋₁(x₁, .., xᵣ₋₂, xᵣ)`.
///
/// Memoized on sub-tuples; the recursion visits O(r²) distinct tuples.
pub fn pi_n(t: &RcTable, xs: &[usize]) -> Result<usize> {
    if xs.is_empty() {
        return Err(Error::EmptyTuple);
    }
    debug_assert!(xs.iter().all(|&x| x < t.n()));
    let mut memo = HashMap::new();
    Ok(pi_rec(t, xs, &mut memo))
}

/// The length-`r` word `Π₁(x₁) · Π₂(x₁,x₂) ··· Πᵣ(x₁, .., xᵣ)`.
///
/// This is the normal form of the product `x₁ ⋯ xᵣ` in the structure
/// monoid.
pub fn sigma_word(t: &RcTable, xs: &[usize]) -> Result<GenWord> {
    if xs.is_empty() {
        return Err(Error::EmptyTuple);
    }
    let mut memo = HashMap::new();
    let letters = (1..=xs.len())
        .map(|k| pi_rec(t, &xs[..k], &mut memo))
        .collect();
    Ok(GenWord::new(letters))
}

/// `Φ: (x, y) ↦ (x ⊳ x, x ⊳ y)`, a bijection of `X²` for valid tables.
pub fn phi(t: &RcTable, x: usize, y: usize) -> (usize, usize) {
    (t.op(x, x), t.op(x, y))
}

/// `Φ` as a permutation of `X²` under the index `(x, y) ↦ x·n + y`.
pub fn phi_perm(t: &RcTable) -> Result<Perm> {
    let n = t.n();
    let images = (0..n * n)
        .map(|i| {
            let (a, b) = phi(t, i / n, i % n);
            a * n + b
        })
        .collect();
    Perm::new(images).map_err(|_| {
        Error::InvariantViolation("phi is not a bijection of X^2".into())
    })
}

/// The class of the quasigroup: the minimal `p >= 1` such that
/// `Π_{p+1}(x, .., x, y) = y` for all `x, y`.
///
/// Iterating the pair recurrence `(a, b) ← (a ⊳ a, a ⊳ b)` from `(x, y)`
/// gives `Φᵏ(x, y) = (Π_{k+1}(x, .., x), Π_{k+1}(x, .., x, y))`, so the
/// class is exactly the order of `Φ` as a permutation of `X²`. The result
/// is cross-checked against direct evaluation of the recursion.
pub fn class_of(t: &RcTable) -> Result<usize> {
    let report = validate_rc(t);
    if !report.all_ok() {
        return Err(Error::InvalidTable(
            report.first_witness().unwrap_or("unknown failure").to_string(),
        ));
    }
    let order = phi_perm(t)?.order();
    let p = usize::try_from(order)
        .map_err(|_| Error::InvariantViolation("class exceeds usize".into()))?;

    // Independent route: evaluate the recursion itself at the returned p.
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            let mut tuple = vec![x; p];
            tuple.push(y);
            if pi_n(t, &tuple)? != y {
                return Err(Error::InvariantViolation(format!(
                    "class cross-check failed at (x,y)=({x},{y}) for p={p}"
                )));
            }
        }
    }
    Ok(p)
}

/// The frozen word `wₓ = Σ_p(x, .., x)`: length exactly `p`, first letter
/// `x`, with letters `x, x ⊳ x, (x ⊳ x) ⊳ (x ⊳ x), ...`.
pub fn frozen_word(t: &RcTable, x: usize, p: usize) -> GenWord {
    let mut letters = Vec::with_capacity(p);
    let mut a = x;
    for _ in 0..p {
        letters.push(a);
        a = t.op(a, a);
    }
    GenWord::new(letters)
}

/// Renders the instance header used by the CLI: size plus generator names.
pub fn describe_generators(n: usize) -> String {
    (0..n).map(|i| letter(i, n)).collect::<Vec<_>>().join(",")
}
