//! Vertex-operator realization of the KKR bijection: normal ordering of
//! affine tensor words, the mode-assignment maps `C_a`, the path-growing
//! maps `Phi_a`, and their composition from the trivial top-level word down
//! to the full highest path.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::crystal::{
    affine_r, combinatorial_r, energy, AffineElement, AffineTensorWord, CrystalElement, TensorWord,
};
use crate::error::{Error, Result};
use crate::rigged::RiggedConfiguration;

/// Result of normal ordering an affine tensor word.
///
/// `sets[i]` is the descending-selection set `S_{i+1}`: `sets` ends with the
/// full set of admissible reorderings and starts with the normal ordered
/// forms. The mode sequence is shared by every normal ordered form.
#[derive(Debug, Clone)]
pub struct NormalOrdering {
    pub sets: Vec<Vec<AffineTensorWord>>,
    pub modes: Vec<i64>,
}

impl NormalOrdering {
    /// The normal ordered forms `S_1`.
    pub fn forms(&self) -> &[AffineTensorWord] {
        &self.sets[0]
    }

    /// The full reordering set `S_m`.
    pub fn reorderings(&self) -> &[AffineTensorWord] {
        self.sets.last().expect("at least one set")
    }

    /// Deterministic representative: lexicographically greatest shape
    /// sequence, ties broken by the least concatenated tableau word.
    pub fn canonical(&self) -> &AffineTensorWord {
        self.forms()
            .iter()
            .max_by(|x, y| {
                x.shapes().cmp(&y.shapes()).then_with(|| {
                    y.classical()
                        .concat_letters()
                        .cmp(&x.classical().concat_letters())
                })
            })
            .expect("normal ordering is nonempty")
    }
}

/// Computes the admissible reorderings of `s` (adjacent R swaps, with
/// equal-length factors never permuted past each other) and selects the
/// normal ordered forms by maximizing modes from the right.
pub fn normal_order(s: &AffineTensorWord) -> Result<NormalOrdering> {
    let m = s.len();
    if m <= 1 {
        return Ok(NormalOrdering { sets: vec![vec![s.clone()]], modes: s.modes() });
    }

    // Breadth-first closure over tracked permutations.
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<(Vec<usize>, Vec<AffineElement>)> = VecDeque::new();
    let mut states: Vec<(Vec<usize>, Vec<AffineElement>)> = Vec::new();
    let start: Vec<usize> = (0..m).collect();
    visited.insert(start.clone());
    queue.push_back((start, s.factors().to_vec()));
    while let Some((perm, word)) = queue.pop_front() {
        for pos in 0..m - 1 {
            if word[pos].element.len() == word[pos + 1].element.len() {
                continue;
            }
            let mut new_perm = perm.clone();
            new_perm.swap(pos, pos + 1);
            if visited.contains(&new_perm) {
                continue;
            }
            let (left, right) = affine_r(&word[pos], &word[pos + 1])?;
            let mut new_word = word.clone();
            new_word[pos] = left;
            new_word[pos + 1] = right;
            visited.insert(new_perm.clone());
            queue.push_back((new_perm, new_word));
        }
        states.push((perm, word));
    }
    states.sort_by(|a, b| a.0.cmp(&b.0));
    let full: Vec<AffineTensorWord> = states
        .into_iter()
        .map(|(_, word)| AffineTensorWord::new(s.rank(), s.restriction(), word))
        .collect::<Result<Vec<_>>>()?;

    let mut sets = vec![full];
    for i in (2..=m).rev() {
        let cur = sets.last().expect("nonempty chain");
        let best = cur
            .iter()
            .map(|w| w.factors()[i - 1].mode)
            .max()
            .expect("set is nonempty");
        let next: Vec<AffineTensorWord> = cur
            .iter()
            .filter(|w| w.factors()[i - 1].mode == best)
            .cloned()
            .collect();
        sets.push(next);
    }
    sets.reverse();

    let modes = sets[0][0].modes();
    for w in &sets[0] {
        assert_eq!(w.modes(), modes, "mode sequence must be shared across normal ordered forms");
    }
    Ok(NormalOrdering { sets, modes })
}

/// Attaches modes to the factors of `b` from the riggings of `(mu, J)`:
/// `d_i = J_i + sum_{k < i} H(b_k (x) b_i^{(k+1)})` with the vacuum row
/// `b_0 = (a+1)^M`. `base` overrides `M` (default: the largest row).
pub fn assign_modes(
    a: usize,
    mu: &[u32],
    riggings: &[i64],
    b: &TensorWord,
    base: Option<u32>,
) -> Result<AffineTensorWord> {
    if mu.len() != riggings.len() || mu.len() != b.len() {
        return Err(Error::LengthMismatch(format!(
            "{} rows, {} riggings, {} factors",
            mu.len(),
            riggings.len(),
            b.len()
        )));
    }
    if b.restriction() != a {
        return Err(Error::RestrictionMismatch(b.restriction(), a));
    }
    if b.is_empty() {
        return Ok(AffineTensorWord::empty(b.rank(), a));
    }
    for (f, &row) in b.factors().iter().zip(mu.iter()) {
        if f.len() != row {
            return Err(Error::ShapeMismatch(format!(
                "factor {} has length {}, row wants {}",
                f, f.len(), row
            )));
        }
    }
    let max_row = *mu.iter().max().expect("nonempty");
    let base_len = base.unwrap_or(max_row);
    if base_len < max_row {
        return Err(Error::ShapeMismatch(format!(
            "vacuum row length {} below max row {}",
            base_len, max_row
        )));
    }
    let b0 = CrystalElement::row(b.rank(), a + 1, base_len, a)?;
    let mut factors = Vec::with_capacity(b.len());
    for idx in 0..b.len() {
        let mut moving = b.factors()[idx].clone();
        let mut h = 0i64;
        for k in (0..idx).rev() {
            h += energy(&b.factors()[k], &moving)? as i64;
            let (front, _) = combinatorial_r(&b.factors()[k], &moving)?;
            moving = front;
        }
        h += energy(&b0, &moving)? as i64;
        factors.push(AffineElement::new(b.factors()[idx].clone(), riggings[idx] + h));
    }
    AffineTensorWord::new(b.rank(), a, factors)
}

/// The level map `C_a`: mode assignment followed by normal ordering.
pub fn map_c(
    a: usize,
    mu: &[u32],
    riggings: &[i64],
    p: &TensorWord,
) -> Result<NormalOrdering> {
    let assigned = assign_modes(a, mu, riggings, p, None)?;
    normal_order(&assigned)
}

/// The level map `Phi_a`: threads the spaced word
/// `T^{d_1} (x) b_1 (x) T^{d_2-d_1} (x) ... (x) b_m` through the vacuum rows
/// `a^{lambda_1} (x) ... (x) a^{lambda_k}` by repeated R and collects the
/// emerging factors. Requires `s` normal ordered with `d_1 >= 0`.
pub fn map_phi(a: usize, s: &AffineTensorWord, lambda: &[u32]) -> Result<TensorWord> {
    if a == 0 {
        return Err(Error::IndexOutOfRange { index: 0, n: s.rank(), restriction: 0 });
    }
    if s.restriction() != a {
        return Err(Error::RestrictionMismatch(s.restriction(), a));
    }
    let modes = s.modes();
    if let Some(&first) = modes.first() {
        if first < 0 {
            return Err(Error::NotNormalOrdered(format!("first mode {} is negative", first)));
        }
    }
    if modes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotNormalOrdered(format!("modes {:?} are not weakly increasing", modes)));
    }
    let n = s.rank();
    let target_restriction = a - 1;

    let mut spaced: Vec<CrystalElement> = Vec::new();
    let mut prev = 0i64;
    for f in s.factors() {
        for _ in 0..(f.mode - prev) {
            spaced.push(CrystalElement::row(n, a, 1, target_restriction)?);
        }
        spaced.push(f.element.with_restriction(target_restriction)?);
        prev = f.mode;
    }

    let mut out = Vec::with_capacity(lambda.len());
    for &lam in lambda {
        let mut column = CrystalElement::row(n, a, lam, target_restriction)?;
        for w in spaced.iter_mut().rev() {
            let (front, stays) = combinatorial_r(w, &column)?;
            column = front;
            *w = stays;
        }
        out.push(column);
    }

    // The leftover word is expected to carry the letter `a` only; this is
    // diagnostic, not a contract.
    for w in &spaced {
        if w.mult().iter().enumerate().any(|(i, &c)| c > 0 && i != a - 1) {
            log::warn!("tail factor {} contains letters other than {}", w, a);
        }
    }

    TensorWord::new(n, target_restriction, out)
}

/// One level of a full vertex run.
#[derive(Debug, Clone)]
pub struct StageTrace {
    /// Level index `a`.
    pub level: usize,
    /// The incoming word `p^(a)`.
    pub input: TensorWord,
    /// Factors with modes attached, before normal ordering.
    pub assigned: AffineTensorWord,
    /// Normal ordering data at this level.
    pub ordering: NormalOrdering,
    /// The normal ordered form fed into `Phi_a`.
    pub chosen: AffineTensorWord,
}

/// Full record of a vertex run down to level `stop`.
#[derive(Debug, Clone)]
pub struct VertexRun {
    pub stages: Vec<StageTrace>,
    pub path: TensorWord,
}

fn seed_word(rc: &RiggedConfiguration) -> Result<TensorWord> {
    let n = rc.n;
    let factors = rc
        .mu(n)
        .iter()
        .map(|&row| CrystalElement::row(n, n + 1, row, n))
        .collect::<Result<Vec<_>>>()?;
    TensorWord::new(n, n, factors)
}

/// Runs `Phi_{stop+1} C_{stop+1} ... Phi_n C_n` on the seed word, keeping
/// per-level traces. `stop = 0` yields the full path.
pub fn run_to(rc: &RiggedConfiguration, stop: usize) -> Result<VertexRun> {
    rc.validate_ok()?;
    if stop > rc.n {
        return Err(Error::IndexOutOfRange { index: stop, n: rc.n, restriction: 0 });
    }
    let mut p = seed_word(rc)?;
    let mut stages = Vec::new();
    for a in (stop + 1..=rc.n).rev() {
        let assigned = assign_modes(a, rc.mu(a), rc.riggings(a), &p, None)?;
        let ordering = normal_order(&assigned)?;
        let chosen = ordering.canonical().clone();
        let next = map_phi(a, &chosen, rc.mu(a - 1))?;
        stages.push(StageTrace { level: a, input: p, assigned, ordering, chosen });
        p = next;
    }
    Ok(VertexRun { stages, path: p })
}

/// The image of the rigged configuration under the vertex-operator
/// composition: a highest path of shape `mu^(0)`.
pub fn rc_to_path(rc: &RiggedConfiguration) -> Result<TensorWord> {
    Ok(run_to(rc, 0)?.path)
}

/// The stage-`a` word `p^(a)` over letters `>= a+1` (`a = 0` is the path).
pub fn intermediate_path(rc: &RiggedConfiguration, a: usize) -> Result<TensorWord> {
    Ok(run_to(rc, a)?.path)
}

/// Runs the composition exploring every normal ordered form at every level
/// and collects the distinct final paths (the theorem asserts a singleton).
pub fn all_branch_paths(rc: &RiggedConfiguration) -> Result<BTreeSet<TensorWord>> {
    rc.validate_ok()?;
    fn descend(
        rc: &RiggedConfiguration,
        a: usize,
        p: TensorWord,
        out: &mut BTreeSet<TensorWord>,
    ) -> Result<()> {
        if a == 0 {
            out.insert(p);
            return Ok(());
        }
        let ordering = map_c(a, rc.mu(a), rc.riggings(a), &p)?;
        for form in ordering.forms() {
            let next = map_phi(a, form, rc.mu(a - 1))?;
            descend(rc, a - 1, next, out)?;
        }
        Ok(())
    }
    let mut out = BTreeSet::new();
    descend(rc, rc.n, seed_word(rc)?, &mut out)?;
    Ok(out)
}
