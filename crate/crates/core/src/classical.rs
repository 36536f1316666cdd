//! The classical KKR bijection between rigged configurations and highest
//! paths, implemented directly on strings of boxes. It serves as the
//! independent oracle for the vertex-operator construction and provides the
//! direct-scattering map (path to rigged configuration).
//!
//! # The algorithm
//!
//! A *string* of level `a` is a row of `mu^(a)` together with its rigging.
//! A string of length `j` is *singular* when its rigging equals the vacancy
//! number `p^(a)_j` of its current configuration.
//!
//! **Rigged configuration to path** (box removal). Factors are produced
//! from the rightmost to the leftmost; inside a factor, letters come out in
//! weakly increasing order, each letter consuming one quantum box. While a
//! factor of remaining length `c` is being processed, the quantum space
//! counts it split as a row of length `c-1` plus a separate single box (the
//! box about to leave). Removing one box:
//!
//! 1. Set the floor to 1. For levels `a = 1` up to `n`, select the shortest
//!    singular string of length at least the floor (singular with respect
//!    to the split quantum space); the floor becomes the selected length.
//!    If no string qualifies, stop: the removed box gets letter `a`. If
//!    every level yields a selection, the letter is `n+1`.
//! 2. Remove one box from every selected string and drop the single box
//!    from the quantum space; empty strings disappear.
//! 3. Modified strings become singular at their new length in the new
//!    configuration; other riggings are untouched.
//!
//! **Path to rigged configuration** (box adding) is the exact inverse.
//! Letters are absorbed factor by factor, left to right, and in weakly
//! decreasing order inside each factor. Absorbing a letter `j`:
//!
//! 1. For levels `a = j-1` down to `1`, select the longest singular string
//!    of length at most the length selected at level `a+1` (unbounded at
//!    level `j-1`), with respect to the quantum space before this letter's
//!    box is added. If no such string exists, a new string of length zero
//!    is selected (the zero string counts as singular).
//! 2. Add one box to every selected string and add the letter's box to the
//!    quantum space as a separate single box.
//! 3. Each modified string gets the vacancy number at its new length in
//!    this split configuration as its rigging; then the single box merges
//!    into the factor's growing row.
//!
//! Letters `1` touch no strings and only grow the quantum space.
//!
//! Ties among singular strings of the chosen length are broken by lowest
//! row index; any consistent choice yields the same bijection.

use crate::boxball;
use crate::crystal::{CrystalElement, TensorWord};
use crate::error::{Error, Result};
use crate::rigged::{Level, RiggedConfiguration};

/// Mutable working state for the box-adding/removal passes.
struct KkrState {
    n: usize,
    /// Quantum-space rows (lengths only; order irrelevant for vacancy
    /// numbers). The row being processed is kept here at its merged length.
    quantum: Vec<u32>,
    /// When set, one quantum box is counted as a separate length-1 row
    /// (the split form used while a letter is in flight).
    split_box: bool,
    /// Strings per level: `(length, rigging)`.
    strings: Vec<Vec<(u32, i64)>>,
}

impl KkrState {
    fn new(n: usize) -> Self {
        KkrState { n, quantum: Vec::new(), split_box: false, strings: vec![Vec::new(); n] }
    }

    fn from_rc(rc: &RiggedConfiguration) -> Self {
        let canonical = rc.canonical();
        KkrState {
            n: rc.n,
            quantum: rc.mu0.clone(),
            split_box: false,
            strings: canonical
                .levels
                .iter()
                .map(|lv| lv.mu.iter().copied().zip(lv.riggings.iter().copied()).collect())
                .collect(),
        }
    }

    fn e_quantity(&self, a: usize, j: u32) -> i64 {
        if a > self.n {
            0
        } else if a == 0 {
            let extra = if self.split_box { 1 } else { 0 };
            self.quantum.iter().map(|&r| j.min(r) as i64).sum::<i64>() + extra
        } else {
            self.strings[a - 1].iter().map(|&(r, _)| j.min(r) as i64).sum()
        }
    }

    fn vacancy(&self, a: usize, j: u32) -> i64 {
        self.e_quantity(a - 1, j) - 2 * self.e_quantity(a, j) + self.e_quantity(a + 1, j)
    }

    fn is_singular(&self, a: usize, idx: usize) -> bool {
        let (len, rig) = self.strings[a - 1][idx];
        rig == self.vacancy(a, len)
    }

    /// Box adding for one letter. `grow_row` is the index of the quantum
    /// row the letter's box merges into, or `None` to open a new row.
    fn absorb(&mut self, letter: usize, grow_row: Option<usize>) {
        debug_assert!((1..=self.n + 1).contains(&letter));
        debug_assert!(!self.split_box);
        // Select against the state without the incoming box.
        let mut selected: Vec<(usize, Option<usize>)> = Vec::new();
        let mut cap = u32::MAX;
        for a in (1..letter).rev() {
            let pick = self.strings[a - 1]
                .iter()
                .enumerate()
                .filter(|&(i, &(len, _))| len <= cap && self.is_singular(a, i))
                .max_by(|x, y| (x.1 .0).cmp(&y.1 .0).then(y.0.cmp(&x.0)))
                .map(|(i, _)| i);
            cap = pick.map_or(0, |i| self.strings[a - 1][i].0);
            selected.push((a, pick));
        }
        // Apply the additions with the new box counted in split form.
        let mut touched: Vec<(usize, usize)> = Vec::new();
        for &(a, pick) in &selected {
            match pick {
                Some(i) => {
                    self.strings[a - 1][i].0 += 1;
                    touched.push((a, i));
                }
                None => {
                    self.strings[a - 1].push((1, 0));
                    touched.push((a, self.strings[a - 1].len() - 1));
                }
            }
        }
        self.split_box = true;
        for &(a, i) in &touched {
            let len = self.strings[a - 1][i].0;
            self.strings[a - 1][i].1 = self.vacancy(a, len);
        }
        // Merge the box into its row.
        self.split_box = false;
        match grow_row {
            Some(i) => self.quantum[i] += 1,
            None => self.quantum.push(1),
        }
    }

    /// Box removal for one letter, taken from quantum row `shrink_row`.
    fn emit(&mut self, shrink_row: usize) -> usize {
        debug_assert!(!self.split_box);
        // Split one box off the row, then select.
        self.quantum[shrink_row] -= 1;
        self.split_box = true;
        let mut selected: Vec<(usize, usize)> = Vec::new();
        let mut floor = 1u32;
        let mut letter = self.n + 1;
        for a in 1..=self.n {
            let pick = self.strings[a - 1]
                .iter()
                .enumerate()
                .filter(|&(i, &(len, _))| len >= floor && self.is_singular(a, i))
                .min_by(|x, y| (x.1 .0).cmp(&y.1 .0).then(x.0.cmp(&y.0)))
                .map(|(i, _)| i);
            match pick {
                Some(i) => {
                    floor = self.strings[a - 1][i].0;
                    selected.push((a, i));
                }
                None => {
                    letter = a;
                    break;
                }
            }
        }
        // The split box leaves; strings shrink and become singular in the
        // new configuration.
        self.split_box = false;
        if self.quantum[shrink_row] == 0 {
            self.quantum.remove(shrink_row);
        }
        for &(a, i) in &selected {
            self.strings[a - 1][i].0 -= 1;
        }
        for &(a, i) in &selected {
            let len = self.strings[a - 1][i].0;
            if len > 0 {
                self.strings[a - 1][i].1 = self.vacancy(a, len);
            }
        }
        for level in &mut self.strings {
            level.retain(|&(len, _)| len > 0);
        }
        letter
    }

    fn into_rc(self, mu0: Vec<u32>) -> RiggedConfiguration {
        let levels = self
            .strings
            .into_iter()
            .map(|rows| Level::new(
                rows.iter().map(|r| r.0).collect(),
                rows.iter().map(|r| r.1).collect(),
            ))
            .collect();
        RiggedConfiguration { n: self.n, mu0, levels, composition: false }
            .canonical()
    }
}

/// Direct scattering: the rigged configuration of a highest path.
pub fn path_to_rc(p: &TensorWord) -> Result<RiggedConfiguration> {
    if p.restriction() != 0 {
        return Err(Error::RestrictionMismatch(p.restriction(), 0));
    }
    for i in 1..=p.rank() {
        if p.epsilon(i) != 0 {
            return Err(Error::NotHighest { index: i });
        }
    }
    let mut state = KkrState::new(p.rank());
    for factor in p.factors() {
        let row_idx = state.quantum.len();
        for (t, letter) in factor.letters().into_iter().rev().enumerate() {
            let grow = if t == 0 { None } else { Some(row_idx) };
            state.absorb(letter, grow);
        }
    }
    let rc = state.into_rc(p.shapes());
    debug_assert!(rc.validate().is_ok(), "box adding must yield a valid configuration");
    Ok(rc)
}

/// Inverse scattering by the classical algorithm: the highest path of a
/// valid rigged configuration.
pub fn rc_to_path(rc: &RiggedConfiguration) -> Result<TensorWord> {
    rc.validate_ok()?;
    let mut state = KkrState::from_rc(rc);
    let mut factors_rev: Vec<CrystalElement> = Vec::new();
    for i in (0..rc.mu0.len()).rev() {
        let mut letters = Vec::with_capacity(rc.mu0[i] as usize);
        for _ in 0..rc.mu0[i] {
            letters.push(state.emit(i));
        }
        factors_rev.push(CrystalElement::from_letters(rc.n, &letters, 0)?);
    }
    debug_assert!(state.strings.iter().all(|l| l.is_empty()), "all strings must be consumed");
    factors_rev.reverse();
    TensorWord::new(rc.n, 0, factors_rev)
}

/// Checks the level-one rigging shift under one carrier pass: evolving a
/// highest `B_1` path by capacity `l` must keep every `mu^(a)` fixed and
/// shift each first-level rigging by `min(l, row length)`.
pub fn rigging_shift_check(p: &TensorWord, l: u32) -> Result<bool> {
    let before = path_to_rc(p)?;
    let evolved = boxball::evolve_word(p, l)?;
    let after = path_to_rc(&evolved)?;
    for a in 1..=before.n {
        if before.mu(a) != after.mu(a) {
            return Ok(false);
        }
        let shift = |i: usize| if a == 1 { (l.min(before.mu(1)[i])) as i64 } else { 0 };
        for i in 0..before.mu(a).len() {
            if after.riggings(a)[i] != before.riggings(a)[i] + shift(i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
