//! Rigged configurations: storage, vacancy numbers, validation,
//! enumeration and rendering.
//!
//! A rigged configuration is `(mu^(0), (mu^(1), J^(1)), ..., (mu^(n), J^(n)))`
//! where each `mu^(a)` is a partition (or, in composition mode, a
//! composition) and `J^(a)` attaches one integer to each row. Vacancy
//! numbers are derived data and never stored.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One level `(mu^(a), J^(a))`, `a >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Level {
    pub mu: Vec<u32>,
    #[serde(rename = "J")]
    pub riggings: Vec<i64>,
}

impl Level {
    pub fn new(mu: Vec<u32>, riggings: Vec<i64>) -> Self {
        Level { mu, riggings }
    }

    pub fn empty() -> Self {
        Level { mu: Vec::new(), riggings: Vec::new() }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RiggedConfiguration {
    pub n: usize,
    pub mu0: Vec<u32>,
    pub levels: Vec<Level>,
    /// When set, row order within each level is user data (Remark-style
    /// composition mode) and is preserved rather than canonicalized.
    #[serde(default, skip_serializing_if = "is_false")]
    pub composition: bool,
}

/// A violated rigging constraint: level `a`, row length `j`, offending
/// row indices (0-based within the level).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcViolation {
    pub level: usize,
    pub row_length: u32,
    pub rows: Vec<usize>,
    pub message: String,
}

impl fmt::Display for RcViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {}, row length {}, rows {:?}: {}",
            self.level, self.row_length, self.rows, self.message
        )
    }
}

impl RiggedConfiguration {
    /// Builds and structurally checks a configuration (counts and pairing;
    /// the rigging inequalities are checked by [`validate`](Self::validate)).
    pub fn new(n: usize, mu0: Vec<u32>, levels: Vec<Level>) -> Result<Self> {
        let rc = RiggedConfiguration { n, mu0, levels, composition: false };
        rc.check_structure()?;
        Ok(rc)
    }

    /// Configuration with all levels empty.
    pub fn vacuum(n: usize, mu0: Vec<u32>) -> Self {
        RiggedConfiguration {
            n,
            mu0,
            levels: vec![Level::empty(); n],
            composition: false,
        }
    }

    pub fn check_structure(&self) -> Result<()> {
        if self.levels.len() != self.n {
            return Err(Error::InvalidRc(format!(
                "{} levels given, rank {} needs {}",
                self.levels.len(),
                self.n,
                self.n
            )));
        }
        if self.mu0.contains(&0) {
            return Err(Error::InvalidRc("mu0 rows must be positive".into()));
        }
        for (idx, level) in self.levels.iter().enumerate() {
            if level.mu.len() != level.riggings.len() {
                return Err(Error::InvalidRc(format!(
                    "level {}: {} rows but {} riggings",
                    idx + 1,
                    level.mu.len(),
                    level.riggings.len()
                )));
            }
            if level.mu.contains(&0) {
                return Err(Error::InvalidRc(format!("level {}: rows must be positive", idx + 1)));
            }
        }
        Ok(())
    }

    /// Total number of boxes in `mu^(0)`.
    pub fn size(&self) -> u32 {
        self.mu0.iter().sum()
    }

    /// Rows of `mu^(a)` for `0 <= a <= n`.
    pub fn mu(&self, a: usize) -> &[u32] {
        if a == 0 {
            &self.mu0
        } else {
            &self.levels[a - 1].mu
        }
    }

    pub fn riggings(&self, a: usize) -> &[i64] {
        &self.levels[a - 1].riggings
    }

    /// `E^(a)_j = sum_i min(j, mu^(a)_i)`, with `E^(n+1)_j = 0`.
    pub fn e_quantity(&self, a: usize, j: u32) -> i64 {
        if a > self.n {
            return 0;
        }
        self.mu(a).iter().map(|&r| j.min(r) as i64).sum()
    }

    /// Vacancy number `p^(a)_j = E^(a-1)_j - 2 E^(a)_j + E^(a+1)_j`.
    pub fn vacancy(&self, a: usize, j: u32) -> i64 {
        debug_assert!((1..=self.n).contains(&a));
        self.e_quantity(a - 1, j) - 2 * self.e_quantity(a, j) + self.e_quantity(a + 1, j)
    }

    /// Checks the rigging constraints: for every level and row length `j`,
    /// the riggings of the length-`j` rows (in row-index order) satisfy
    /// `0 <= J_1 <= ... <= J_m <= p^(a)_j`. In partition mode the row
    /// lengths must also be weakly decreasing.
    pub fn validate(&self) -> std::result::Result<(), RcViolation> {
        for (idx, level) in self.levels.iter().enumerate() {
            let a = idx + 1;
            if !self.composition && !level.mu.windows(2).all(|w| w[0] >= w[1]) {
                return Err(RcViolation {
                    level: a,
                    row_length: 0,
                    rows: Vec::new(),
                    message: "rows are not weakly decreasing (partition mode)".into(),
                });
            }
            let mut lengths: Vec<u32> = level.mu.clone();
            lengths.sort_unstable();
            lengths.dedup();
            for &j in &lengths {
                let rows: Vec<usize> =
                    (0..level.mu.len()).filter(|&i| level.mu[i] == j).collect();
                let p = self.vacancy(a, j);
                let mut prev = 0i64;
                for &i in &rows {
                    let r = level.riggings[i];
                    if r < 0 {
                        return Err(RcViolation {
                            level: a,
                            row_length: j,
                            rows: vec![i],
                            message: format!("rigging {} is negative", r),
                        });
                    }
                    if r < prev {
                        return Err(RcViolation {
                            level: a,
                            row_length: j,
                            rows: rows.clone(),
                            message: "riggings of equal-length rows must weakly increase".into(),
                        });
                    }
                    prev = r;
                }
                if prev > p {
                    return Err(RcViolation {
                        level: a,
                        row_length: j,
                        rows,
                        message: format!("rigging {} exceeds vacancy number {}", prev, p),
                    });
                }
            }
        }
        Ok(())
    }

    /// [`validate`](Self::validate) folded into the crate error type.
    pub fn validate_ok(&self) -> Result<()> {
        self.check_structure()?;
        self.validate().map_err(|v| Error::InvalidRc(v.to_string()))
    }

    /// Canonical form: rows of each level sorted by decreasing length,
    /// riggings of equal-length rows sorted increasingly. `mu0` is left
    /// untouched (it orders the path factors).
    pub fn canonical(&self) -> Self {
        let mut rc = self.clone();
        for level in &mut rc.levels {
            let mut rows: Vec<(u32, i64)> =
                level.mu.iter().copied().zip(level.riggings.iter().copied()).collect();
            rows.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
            level.mu = rows.iter().map(|r| r.0).collect();
            level.riggings = rows.iter().map(|r| r.1).collect();
        }
        rc.composition = false;
        rc
    }

    /// Truncation at level `a`: `mu^(a)` becomes the quantum space and the
    /// levels above it are kept, as a rank `n - a` configuration.
    pub fn truncated(&self, a: usize) -> RiggedConfiguration {
        debug_assert!(a <= self.n);
        RiggedConfiguration {
            n: self.n - a,
            mu0: self.mu(a).to_vec(),
            levels: self.levels[a..].to_vec(),
            composition: self.composition,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rigged configurations serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let mut rc: RiggedConfiguration =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if rc.levels.len() < rc.n {
            rc.levels.resize(rc.n, Level::empty());
        }
        rc.check_structure()?;
        Ok(rc)
    }

    /// Plain-text rendering: one block per level, vacancy numbers on the
    /// left of each row and riggings on the right.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        out.push_str("mu^(0)\n");
        for &row in &self.mu0 {
            out.push_str("      ");
            out.push_str(&"[]".repeat(row as usize));
            out.push('\n');
        }
        for a in 1..=self.n {
            out.push_str(&format!("mu^({a})\n"));
            let mu = self.mu(a);
            let widest = mu.iter().copied().max().unwrap_or(0) as usize;
            for (i, &row) in mu.iter().enumerate() {
                let p = self.vacancy(a, row);
                let cells = "[]".repeat(row as usize);
                out.push_str(&format!(
                    "{p:>4} {cells:<width$} {r}\n",
                    width = 2 * widest,
                    r = self.riggings(a)[i]
                ));
            }
        }
        out
    }
}

/// All partitions of `s`, parts weakly decreasing.
pub fn partitions_of(s: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(s, s, &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing `count`-tuples with entries in `0..=bound`.
fn bounded_chains(count: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(count: usize, lo: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if count == 0 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=bound {
            cur.push(v);
            rec(count - 1, v, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if bound >= 0 {
        rec(count, 0, bound, &mut Vec::new(), &mut out);
    }
    out
}

/// Enumerates every valid rigged configuration with the given `mu0`
/// (canonical partition form, duplicate-free). `cap` bounds `|mu0|`.
pub fn enumerate_rcs(n: usize, mu0: &[u32], cap: u32) -> Result<Vec<RiggedConfiguration>> {
    let size: u32 = mu0.iter().sum();
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    if mu0.contains(&0) {
        return Err(Error::InvalidRc("mu0 rows must be positive".into()));
    }
    let mut out = Vec::new();
    let mut shapes: Vec<Vec<u32>> = Vec::new();
    fn shape_rec(
        n: usize,
        mu0: &[u32],
        prev_size: u32,
        shapes: &mut Vec<Vec<u32>>,
        out: &mut Vec<RiggedConfiguration>,
    ) {
        if shapes.len() == n {
            fill_riggings(n, mu0, shapes, out);
            return;
        }
        // Valid configurations have weakly decreasing level sizes.
        for s in 0..=prev_size {
            for shape in partitions_of(s) {
                shapes.push(shape);
                shape_rec(n, mu0, s, shapes, out);
                shapes.pop();
            }
        }
    }
    fn fill_riggings(
        n: usize,
        mu0: &[u32],
        shapes: &[Vec<u32>],
        out: &mut Vec<RiggedConfiguration>,
    ) {
        let skeleton = RiggedConfiguration {
            n,
            mu0: mu0.to_vec(),
            levels: shapes.iter().map(|s| Level::new(s.clone(), vec![0; s.len()])).collect(),
            composition: false,
        };
        // Each level factors into independent equal-length groups; collect
        // the rigging choices per group and take the cartesian product.
        let mut groups: Vec<(usize, usize, usize, Vec<Vec<i64>>)> = Vec::new();
        for a in 1..=n {
            let mu = &shapes[a - 1];
            let mut i = 0;
            while i < mu.len() {
                let j = mu[i];
                let mut k = i;
                while k < mu.len() && mu[k] == j {
                    k += 1;
                }
                let p = skeleton.vacancy(a, j);
                if p < 0 {
                    return;
                }
                groups.push((a, i, k - i, bounded_chains(k - i, p)));
                i = k;
            }
        }
        let mut rc = skeleton;
        fn product(
            groups: &[(usize, usize, usize, Vec<Vec<i64>>)],
            rc: &mut RiggedConfiguration,
            out: &mut Vec<RiggedConfiguration>,
        ) {
            let Some(((a, start, _count, choices), rest)) = groups.split_first() else {
                debug_assert!(rc.validate().is_ok());
                out.push(rc.clone());
                return;
            };
            for choice in choices {
                rc.levels[a - 1].riggings[*start..*start + choice.len()]
                    .copy_from_slice(choice);
                product(rest, rc, out);
            }
        }
        product(&groups, &mut rc, out);
    }
    shape_rec(n, mu0, size, &mut shapes, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The running rank-3 example configuration:
    /// `mu0 = (3,2,1,1,1,1,1)`, `mu^(1) = (2,2,1,1)` with riggings
    /// `(0,0,0,1)`, `mu^(2) = (2,1)` with `(1,0)`, `mu^(3) = (1)` with `(0)`.
    pub fn sample_rc() -> RiggedConfiguration {
        RiggedConfiguration::new(
            3,
            vec![3, 2, 1, 1, 1, 1, 1],
            vec![
                Level::new(vec![2, 2, 1, 1], vec![0, 0, 0, 1]),
                Level::new(vec![2, 1], vec![1, 0]),
                Level::new(vec![1], vec![0]),
            ],
        )
        .unwrap()
    }

    /// Thirteen-box single-column example: `mu^(1) = (4,3,1)/(0,1,4)`,
    /// `mu^(2) = (2,1)/(0,0)`, `mu^(3) = (1)/(0)`.
    pub fn thirteen_box_rc() -> RiggedConfiguration {
        RiggedConfiguration::new(
            3,
            vec![1; 13],
            vec![
                Level::new(vec![4, 3, 1], vec![0, 1, 4]),
                Level::new(vec![2, 1], vec![0, 0]),
                Level::new(vec![1], vec![0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn e_quantity_examples() {
        let rc = RiggedConfiguration::new(
            1,
            vec![1; 6],
            vec![Level::new(vec![2, 2, 1, 1], vec![0, 0, 0, 0])],
        )
        .unwrap();
        assert_eq!(rc.e_quantity(1, 1), 4);
        let rc2 = thirteen_box_rc();
        assert_eq!(rc2.e_quantity(1, 2), 5);
        assert_eq!(rc2.e_quantity(2, 5), 3);
        // Empty level at any j.
        let rc3 = RiggedConfiguration::vacuum(2, vec![3]);
        assert_eq!(rc3.e_quantity(1, 7), 0);
        // Beyond the last level the convention is zero.
        assert_eq!(rc2.e_quantity(4, 1), 0);
    }

    #[test]
    fn vacancy_examples() {
        let rc = thirteen_box_rc();
        // p^(1)_1 = 13 - 2*3 + 2 = 9 >= J^(1)_3 = 4.
        assert_eq!(rc.vacancy(1, 1), 9);
        assert!(rc.vacancy(1, 1) >= rc.riggings(1)[2]);

        let vac = RiggedConfiguration::vacuum(2, vec![1; 5]);
        assert_eq!(vac.vacancy(1, 1), 5);
        assert_eq!(vac.vacancy(1, 3), 5);

        let rc = sample_rc();
        assert_eq!(rc.vacancy(2, 1), 1);
        assert_eq!(rc.vacancy(1, 1), 1);
        assert_eq!(rc.vacancy(1, 2), 0);
        assert_eq!(rc.vacancy(2, 2), 1);
        assert_eq!(rc.vacancy(3, 1), 0);
    }

    #[test]
    fn validate_examples() {
        assert!(sample_rc().validate().is_ok());
        assert!(thirteen_box_rc().validate().is_ok());

        let bad = RiggedConfiguration::new(
            1,
            vec![1, 1, 1],
            vec![Level::new(vec![1], vec![-1])],
        )
        .unwrap();
        let v = bad.validate().unwrap_err();
        assert_eq!(v.level, 1);
        assert!(v.message.contains("negative"));

        // mu0 = (1), mu^(1) = (1): vacancy -1 < rigging 0.
        let bad2 =
            RiggedConfiguration::new(1, vec![1], vec![Level::new(vec![1], vec![0])]).unwrap();
        let v2 = bad2.validate().unwrap_err();
        assert_eq!((v2.level, v2.row_length), (1, 1));
        assert!(v2.message.contains("exceeds"));
    }

    #[test]
    fn validate_is_stable_under_equal_row_permutation() {
        // Swapping the two length-1 rows together with their riggings is
        // only canonical one way; the other order must be flagged.
        let rc = sample_rc();
        assert!(rc.validate().is_ok());
        let mut swapped = rc.clone();
        swapped.levels[0].mu = vec![2, 2, 1, 1];
        swapped.levels[0].riggings = vec![0, 0, 1, 0];
        assert!(swapped.validate().is_err());
        assert_eq!(swapped.canonical(), rc);
    }

    #[test]
    fn composition_mode_checks_index_order() {
        let mut rc = RiggedConfiguration::new(
            1,
            vec![1; 8],
            vec![Level::new(vec![1, 2, 1], vec![0, 0, 1])],
        )
        .unwrap();
        // Partition mode rejects the unsorted rows outright.
        assert!(rc.validate().is_err());
        rc.composition = true;
        assert!(rc.validate().is_ok());
        rc.levels[0].riggings = vec![1, 0, 0];
        assert!(rc.validate().is_err());
    }

    #[test]
    fn enumerate_small_cases() {
        let rcs = enumerate_rcs(1, &[1, 1], 10).unwrap();
        assert_eq!(rcs.len(), 2);
        let rcs = enumerate_rcs(1, &[1], 10).unwrap();
        assert_eq!(rcs.len(), 1);
        assert!(rcs[0].levels[0].mu.is_empty());
        assert!(matches!(
            enumerate_rcs(1, &[7], 6),
            Err(Error::CapExceeded { size: 7, cap: 6 })
        ));
        for rc in enumerate_rcs(3, &[2, 2, 1], 10).unwrap() {
            assert!(rc.validate().is_ok());
        }
    }

    #[test]
    fn json_round_trip() {
        let rc = sample_rc();
        let s = rc.to_json();
        assert_eq!(RiggedConfiguration::from_json(&s).unwrap(), rc);
        let parsed = RiggedConfiguration::from_json(
            r#"{"n":3,"mu0":[3,2,1,1,1,1,1],"levels":[{"mu":[2,2,1,1],"J":[0,0,0,1]},{"mu":[2,1],"J":[1,0]},{"mu":[1],"J":[0]}]}"#,
        )
        .unwrap();
        assert_eq!(parsed, rc);
    }

    #[test]
    fn ascii_rendering_mentions_every_row() {
        let rc = thirteen_box_rc();
        let txt = rc.render_ascii();
        assert!(txt.contains("mu^(1)"));
        assert!(txt.contains("mu^(3)"));
        // Longest first-level row: 4 cells, rigging 0, vacancy 0.
        assert!(txt.contains("[][][][]"));
        let empty = RiggedConfiguration::vacuum(2, vec![2]);
        let txt = empty.render_ascii();
        assert!(txt.contains("mu^(2)"));
    }
}
