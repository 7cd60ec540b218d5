//! Independent ground truth for the word problem in the structure monoid.
//!
//! The defining relations `x(x ⊳ y) = y(y ⊳ x)` replace length-2 factors
//! by length-2 factors, so equivalence classes of words are finite within
//! each length and can be closed off by plain breadth-first search: no
//! completion or termination theory needed. The closure engine never
//! consults the coordinate realization it is used to certify.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::rcq::RcTable;
use crate::word::GenWord;

/// Default length cap: worst case `n = 4` keeps 4⁷ = 16384 words per
/// length stratum, which the closure holds in memory comfortably.
pub const DEFAULT_MAX_LEN: usize = 7;

/// The full set of words equivalent to a given word under the defining
/// relations. All members have the same length.
pub type WordClass = Rc<BTreeSet<Vec<usize>>>;

/// BFS closure engine with class caching.
///
/// Classes are cached under their lexicographically minimal representative,
/// with a member-to-representative index for lookups. Results are
/// deterministic regardless of query order.
pub struct Oracle<'a> {
    table: &'a RcTable,
    max_len: usize,
    // left_inv[x][z] = the unique y with x ⊳ y = z
    left_inv: Vec<Vec<usize>>,
    rep_of: HashMap<Vec<usize>, Vec<usize>>,
    classes: HashMap<Vec<usize>, WordClass>,
}

impl<'a> Oracle<'a> {
    pub fn new(table: &'a RcTable) -> Self {
        Self::with_max_len(table, DEFAULT_MAX_LEN)
    }

    pub fn with_max_len(table: &'a RcTable, max_len: usize) -> Self {
        let n = table.n();
        let left_inv = (0..n)
            .map(|x| table.left_translation(x).inverse())
            .map(|p| (0..n).map(|z| p.apply(z)).collect())
            .collect();
        Oracle {
            table,
            max_len,
            left_inv,
            rep_of: HashMap::new(),
            classes: HashMap::new(),
        }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.max_len {
            return Err(Error::WordTooLong {
                len,
                cap: self.max_len,
            });
        }
        Ok(())
    }

    /// Rewrites the factor at position `i`: `(x, x ⊳ y) ↦ (y, y ⊳ x)`.
    /// Every adjacent pair matches exactly one relation side, and the
    /// rewrite is involutive.
    fn rewrite_at(&self, w: &[usize], i: usize) -> Vec<usize> {
        let (u, v) = (w[i], w[i + 1]);
        let y = self.left_inv[u][v];
        let mut out = w.to_vec();
        out[i] = y;
        out[i + 1] = self.table.op(y, u);
        out
    }

    /// The full equivalence class of `w` under the defining relations.
    pub fn word_class(&mut self, w: &GenWord) -> Result<WordClass> {
        self.check_len(w.len())?;
        let start = w.letters().to_vec();
        if let Some(rep) = self.rep_of.get(&start) {
            return Ok(Rc::clone(&self.classes[rep]));
        }

        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for i in 0..cur.len().saturating_sub(1) {
                let next = self.rewrite_at(&cur, i);
                if !seen.contains(&next) {
                    // a previously closed class absorbs the whole search
                    if let Some(rep) = self.rep_of.get(&next).cloned() {
                        let class = Rc::clone(&self.classes[&rep]);
                        for member in seen {
                            self.rep_of.insert(member, rep.clone());
                        }
                        return Ok(class);
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }

        let rep = seen.iter().next().expect("class is nonempty").clone();
        let class: WordClass = Rc::new(seen);
        for member in class.iter() {
            self.rep_of.insert(member.clone(), rep.clone());
        }
        self.classes.insert(rep, Rc::clone(&class));
        Ok(class)
    }

    /// Word equality in the monoid. Words of different lengths are
    /// immediately unequal (the relations preserve length).
    pub fn words_equal(&mut self, w1: &GenWord, w2: &GenWord) -> Result<bool> {
        if w1.len() != w2.len() {
            return Ok(false);
        }
        let class = self.word_class(w1)?;
        Ok(class.contains(w2.letters()))
    }

    /// Number of equivalence classes among all `nʳ` words of length `r`.
    pub fn count_classes(&mut self, r: usize) -> Result<usize> {
        self.check_len(r)?;
        let n = self.table.n();
        let mut counted: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut count = 0;
        let mut word = vec![0usize; r];
        loop {
            if !counted.contains(&word) {
                count += 1;
                let class = self.word_class(&GenWord::new(word.clone()))?;
                counted.extend(class.iter().cloned());
            }
            // next word in lexicographic order
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(count);
                }
                i -= 1;
                if word[i] + 1 < n {
                    word[i] += 1;
                    for c in &mut word[i + 1..] {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }
}

/// Binomial coefficient, the predicted class count at each length: words
/// of length `r` biject with vectors `u ∈ ℕⁿ`, `|u| = r`, giving
/// `C(r+n-1, n-1)` classes.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
