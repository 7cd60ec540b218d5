//! Set-theoretic solutions of the Yang-Baxter equation on a finite set,
//! their validation, and the correspondence with RC-quasigroups.

use std::collections::HashMap;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rcq::{validate_rc, Check, RcTable};

/// Default cap for [`enumerate_rc`]: the raw search space is `n^(n²)`,
/// 19683 tables at `n = 3` and about 4·10⁹ at `n = 4`.
pub const ENUM_CAP_DEFAULT: usize = 3;

/// The map `R` on `X²` as an `n²`-entry table of pairs.
///
/// `r(x, y) = (R₁(x, y), R₂(x, y))` with row index `x`, column index `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTable {
    n: usize,
    r: Vec<(usize, usize)>,
}

impl SolutionTable {
    pub fn new(rows: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        let mut r = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (y, &(a, b)) in row.iter().enumerate() {
                if a >= n || b >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry R({x},{y}) = ({a},{b}) out of range 0..{n}"
                    )));
                }
                r.push((a, b));
            }
        }
        Ok(SolutionTable { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        self.r[x * self.n + y]
    }

    pub fn r1(&self, x: usize, y: usize) -> usize {
        self.r(x, y).0
    }

    pub fn r2(&self, x: usize, y: usize) -> usize {
        self.r(x, y).1
    }

    pub fn to_rows(&self) -> Vec<Vec<(usize, usize)>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.r(x, y)).collect())
            .collect()
    }

    /// Conjugate solution under a relabeling `rho` of `X`.
    pub fn relabel(&self, rho: &crate::perm::Perm) -> SolutionTable {
        assert_eq!(rho.len(), self.n, "relabeling size mismatch");
        let inv = rho.inverse();
        let mut r = Vec::with_capacity(self.n * self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                let (a, b) = self.r(rho.apply(x), rho.apply(y));
                r.push((inv.apply(a), inv.apply(b)));
            }
        }
        SolutionTable { n: self.n, r }
    }
}

/// Validation flags for a [`SolutionTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport {
    /// `r` is a bijection of `X²`.
    pub bijective: Check,
    /// `R ∘ R = id` on `X²`.
    pub involutive: Check,
    /// `y ↦ R₁(x, y)` and `x ↦ R₂(x, y)` are bijections for every fixed
    /// other argument.
    pub nondegenerate: Check,
    /// The braid identity `R¹²R²³R¹² = R²³R¹²R²³` on all `n³` triples.
    /// Only evaluated (and only reportable true) when `bijective` holds.
    pub ybe: Check,
}

impl SolutionReport {
    pub fn all_ok(&self) -> bool {
        self.bijective.ok && self.involutive.ok && self.nondegenerate.ok && self.ybe.ok
    }

    pub fn flags(&self) -> [bool; 4] {
        [
            self.bijective.ok,
            self.involutive.ok,
            self.nondegenerate.ok,
            self.ybe.ok,
        ]
    }

    pub fn first_witness(&self) -> Option<&str> {
        [&self.bijective, &self.involutive, &self.nondegenerate, &self.ybe]
            .into_iter()
            .flat_map(|c| c.witnesses.first())
            .map(String::as_str)
            .next()
    }
}

fn r12(s: &SolutionTable, (x, y, z): (usize, usize, usize)) -> (usize, usize, usize) {
    let (a, b) = s.r(x, y);
    (a, b, z)
}

fn r23(s: &SolutionTable, (x, y, z): (usize, usize, usize)) -> (usize, usize, usize) {
    let (a, b) = s.r(y, z);
    (x, a, b)
}

/// Checks, by exhaustion, bijectivity of `r` on `X²`, involutivity, both
/// nondegeneracy conditions, and the braid identity on all `n³` triples.
pub fn validate_solution(s: &SolutionTable) -> SolutionReport {
    let n = s.n();
    const MAX_WITNESSES: usize = 8;

    let mut bij_witnesses = Vec::new();
    let mut image_of: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let img = s.r(x, y);
            if let Some(&prev) = image_of.get(&img) {
                if bij_witnesses.len() < MAX_WITNESSES {
                    bij_witnesses.push(format!(
                        "r collides: R({},{}) = R({x},{y}) = ({},{})",
                        prev.0, prev.1, img.0, img.1
                    ));
                }
            } else {
                image_of.insert(img, (x, y));
            }
        }
    }
    let bijective = Check::from_witnesses(bij_witnesses);

    let mut inv_witnesses = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (a, b) = s.r(x, y);
            if s.r(a, b) != (x, y)
                && inv_witnesses.len() < MAX_WITNESSES {
                    inv_witnesses.push(format!(
                        "R²({x},{y}) = {:?}, expected ({x},{y})",
                        s.r(a, b)
                    ));
                }
        }
    }
    let involutive = Check::from_witnesses(inv_witnesses);

    let mut nd_witnesses = Vec::new();
    for x in 0..n {
        let mut seen = vec![false; n];
        for y in 0..n {
            let v = s.r1(x, y);
            if seen[v] {
                nd_witnesses.push(format!(
                    "y ↦ R₁({x},y) is not bijective: value {v} repeats"
                ));
                break;
            }
            seen[v] = true;
        }
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let v = s.r2(x, y);
            if seen[v] {
                nd_witnesses.push(format!(
                    "x ↦ R₂(x,{y}) is not bijective: value {v} repeats"
                ));
                break;
            }
            seen[v] = true;
        }
    }
    let nondegenerate = Check::from_witnesses(nd_witnesses);

    let ybe = if !bijective.ok {
        Check::from_witnesses(vec![
            "braid identity not evaluated: r is not a bijection of X²".into(),
        ])
    } else {
        let mut ybe_witnesses = Vec::new();
        'ybe: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = r12(s, r23(s, r12(s, (x, y, z))));
                    let rhs = r23(s, r12(s, r23(s, (x, y, z))));
                    if lhs != rhs {
                        ybe_witnesses.push(format!(
                            "braid identity fails at ({x},{y},{z}): lhs={lhs:?}, rhs={rhs:?}"
                        ));
                        if ybe_witnesses.len() >= MAX_WITNESSES {
                            break 'ybe;
                        }
                    }
                }
            }
        }
        Check::from_witnesses(ybe_witnesses)
    };

    SolutionReport {
        bijective,
        involutive,
        nondegenerate,
        ybe,
    }
}

/// Derives the RC-operation from a solution: `x ⊳ y` is the unique `z`
/// with `R₁(x, z) = y`.
pub fn solution_to_rc(s: &SolutionTable) -> Result<RcTable> {
    let n = s.n();
    let mut rows = Vec::with_capacity(n);
    for x in 0..n {
        // invert y ↦ R₁(x, y)
        let mut inv = vec![None; n];
        for z in 0..n {
            let w = s.r1(x, z);
            if inv[w].is_some() {
                return Err(Error::InvariantViolation(format!(
                    "no unique z with R₁({x},z) = {w}: degenerate input"
                )));
            }
            inv[w] = Some(z);
        }
        let row: Option<Vec<usize>> = inv.into_iter().collect();
        let row = row.ok_or_else(|| {
            Error::InvariantViolation(format!("R₁({x},·) is not surjective"))
        })?;
        rows.push(row);
    }
    RcTable::new(rows)
}

/// The converse construction: the solution with `R(x, x ⊳ y) = (y, y ⊳ x)`.
///
/// Given `(x, w)`, the unique `y` with `x ⊳ y = w` exists because
/// left-translations are bijective; the round trip through
/// [`solution_to_rc`] recovers the table.
pub fn rc_to_solution(t: &RcTable) -> Result<SolutionTable> {
    let n = t.n();
    let mut rows = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for w in 0..n {
            let y = t.left_translation_inv(x, w).ok_or_else(|| {
                Error::InvalidTable(format!(
                    "left-translation of {x} is not bijective"
                ))
            })?;
            row.push((y, t.op(y, x)));
        }
        rows.push(row);
    }
    SolutionTable::new(rows)
}

/// Built-in table families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `x ⊳ y = y`; class 1, free abelian structure monoid.
    Trivial,
    /// `x ⊳ y = f(y)` with `f` the n-cycle `0 → 1 → ... → n-1 → 0`;
    /// class n.
    Cycle,
    /// `x ⊳ y = σ(y)` with `σ` the fixed-point-free involution swapping
    /// `2i ↔ 2i+1`; requires even n; class 2.
    Involution,
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Builtin::Trivial),
            "cycle" => Ok(Builtin::Cycle),
            "involution" => Ok(Builtin::Involution),
            other => Err(Error::UnknownBuiltin(other.to_string())),
        }
    }
}

/// Constructs a built-in RC-table of size `n`.
pub fn builtin(kind: Builtin, n: usize) -> Result<RcTable> {
    if n == 0 {
        return Err(Error::MalformedTable("n must be positive".into()));
    }
    let row: Vec<usize> = match kind {
        Builtin::Trivial => (0..n).collect(),
        Builtin::Cycle => (0..n).map(|y| (y + 1) % n).collect(),
        Builtin::Involution => {
            if !n.is_multiple_of(2) {
                return Err(Error::UnknownBuiltin(format!(
                    "involution requires even n, got {n}"
                )));
            }
            (0..n).map(|y| y ^ 1).collect()
        }
    };
    RcTable::new(vec![row; n])
}

/// Parses a `name:n` builtin spec, e.g. `cycle:3`.
pub fn builtin_spec(spec: &str) -> Result<RcTable> {
    let (name, size) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownBuiltin(format!("{spec}: expected name:n")))?;
    let kind = name.parse::<Builtin>()?;
    let n: usize = size
        .parse()
        .map_err(|_| Error::UnknownBuiltin(format!("{spec}: bad size {size:?}")))?;
    builtin(kind, n)
}

/// Enumerates all valid RC-tables of size `n` in lexicographic table
/// order, with the default cap of [`ENUM_CAP_DEFAULT`].
pub fn enumerate_rc(n: usize) -> Result<impl Iterator<Item = RcTable>> {
    enumerate_rc_capped(n, ENUM_CAP_DEFAULT)
}

/// [`enumerate_rc`] with an explicit cap (the CLI raises it through
/// `YBX_MAX_ENUM_N`).
///
/// Every valid table has bijective rows, so the scan runs over tuples of
/// permutations row by row; this preserves lexicographic table order while
/// cutting the space from `n^(n²)` to `(n!)^n`.
pub fn enumerate_rc_capped(n: usize, cap: usize) -> Result<impl Iterator<Item = RcTable>> {
    if n == 0 {
        return Err(Error::MalformedTable("n must be positive".into()));
    }
    if n > cap {
        return Err(Error::EnumerationTooLarge { n, cap });
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let iter = std::iter::repeat_n(perms, n)
        .multi_cartesian_product()
        .filter_map(|rows| {
            let t = RcTable::new(rows).expect("rows are in range");
            validate_rc(&t).all_ok().then_some(t)
        });
    Ok(iter)
}
