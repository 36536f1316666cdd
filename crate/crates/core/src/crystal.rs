//! One-row crystals for affine type A, their Kashiwara operators, the
//! combinatorial R-matrix and the energy function.
//!
//! An element of `B_l` is stored as a multiplicity vector over the alphabet
//! `{1, ..., n+1}`. The sub-alphabet crystals `B^{>=a+1}_l` (letters `<= a`
//! forbidden) reuse the same representation with a `restriction` tag; all
//! piecewise-linear formulas are evaluated over the full alphabet, which
//! agrees with the restricted-alphabet evaluation on restricted elements.

use std::fmt;

use crate::error::{Error, Result};

/// Element of the one-row crystal `B_l` (`l` = sum of multiplicities).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalElement {
    n: usize,
    restriction: usize,
    mult: Vec<u32>,
}

impl CrystalElement {
    /// Builds an element from its multiplicity vector `(x_1, ..., x_{n+1})`.
    pub fn new(n: usize, mult: Vec<u32>, restriction: usize) -> Result<Self> {
        if mult.len() != n + 1 {
            return Err(Error::InvalidElement(format!(
                "multiplicity vector has {} entries, rank {} needs {}",
                mult.len(),
                n,
                n + 1
            )));
        }
        if restriction > n {
            return Err(Error::InvalidElement(format!(
                "restriction {} exceeds rank {}",
                restriction, n
            )));
        }
        if mult.iter().sum::<u32>() == 0 {
            return Err(Error::InvalidElement("element must have length >= 1".into()));
        }
        if mult[..restriction].iter().any(|&c| c != 0) {
            return Err(Error::InvalidElement(format!(
                "letters <= {} must not occur (restriction)",
                restriction
            )));
        }
        Ok(CrystalElement { n, restriction, mult })
    }

    /// Builds an element from an explicit list of letters in `{1, ..., n+1}`.
    pub fn from_letters(n: usize, letters: &[usize], restriction: usize) -> Result<Self> {
        let mut mult = vec![0u32; n + 1];
        for &c in letters {
            if c < 1 || c > n + 1 {
                return Err(Error::InvalidElement(format!(
                    "letter {} outside alphabet 1..={}",
                    c,
                    n + 1
                )));
            }
            mult[c - 1] += 1;
        }
        CrystalElement::new(n, mult, restriction)
    }

    /// The row `letter^len`, i.e. `len` copies of a single letter.
    pub fn row(n: usize, letter: usize, len: u32, restriction: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidElement("row length must be >= 1".into()));
        }
        let mut mult = vec![0u32; n + 1];
        if letter < 1 || letter > n + 1 {
            return Err(Error::InvalidElement(format!(
                "letter {} outside alphabet 1..={}",
                letter,
                n + 1
            )));
        }
        mult[letter - 1] = len;
        CrystalElement::new(n, mult, restriction)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn restriction(&self) -> usize {
        self.restriction
    }

    /// Tableau length `l`.
    pub fn len(&self) -> u32 {
        self.mult.iter().sum()
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Classical weight: the multiplicity vector itself.
    pub fn weight(&self) -> &[u32] {
        &self.mult
    }

    /// Letters of the row in weakly increasing order.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for (idx, &c) in self.mult.iter().enumerate() {
            for _ in 0..c {
                out.push(idx + 1);
            }
        }
        out
    }

    /// Retags the element as living in `B^{>=restriction+1}`.
    pub fn with_restriction(&self, restriction: usize) -> Result<Self> {
        CrystalElement::new(self.n, self.mult.clone(), restriction)
    }

    /// Relabels letters downward by `shift` into the rank `n - shift` crystal.
    /// Requires every letter to exceed `shift`.
    pub fn shift_down(&self, shift: usize) -> Result<Self> {
        if shift > self.n {
            return Err(Error::InvalidElement(format!(
                "cannot shift rank {} down by {}",
                self.n, shift
            )));
        }
        if self.mult[..shift].iter().any(|&c| c != 0) {
            return Err(Error::InvalidElement(format!(
                "letters <= {} present, cannot relabel down",
                shift
            )));
        }
        let mult = self.mult[shift..].to_vec();
        CrystalElement::new(self.n - shift, mult, self.restriction.saturating_sub(shift))
    }

    /// Relabels letters upward by `shift` into the rank `new_n` crystal,
    /// tagging the result with restriction `shift`.
    pub fn shift_up(&self, shift: usize, new_n: usize) -> Result<Self> {
        if new_n < self.n + shift {
            return Err(Error::InvalidElement(format!(
                "rank {} too small for shifting rank {} up by {}",
                new_n, self.n, shift
            )));
        }
        let mut mult = vec![0u32; shift];
        mult.extend_from_slice(&self.mult);
        mult.resize(new_n + 1, 0);
        CrystalElement::new(new_n, mult, shift)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i <= self.restriction || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
                restriction: self.restriction,
            });
        }
        Ok(())
    }

    /// Number of times the raising operator for `i` applies: `x_{i+1}`.
    pub fn epsilon(&self, i: usize) -> u32 {
        self.mult[i]
    }

    /// Number of times the lowering operator for `i` applies: `x_i`.
    pub fn phi(&self, i: usize) -> u32 {
        self.mult[i - 1]
    }

    /// Raising operator: turns one letter `i+1` into `i`, or `None`.
    pub fn kashiwara_e(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        if self.mult[i] == 0 {
            return Ok(None);
        }
        let mut mult = self.mult.clone();
        mult[i] -= 1;
        mult[i - 1] += 1;
        Ok(Some(CrystalElement { n: self.n, restriction: self.restriction, mult }))
    }

    /// Lowering operator: turns one letter `i` into `i+1`, or `None`.
    pub fn kashiwara_f(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        if self.mult[i - 1] == 0 {
            return Ok(None);
        }
        let mut mult = self.mult.clone();
        mult[i - 1] -= 1;
        mult[i] += 1;
        Ok(Some(CrystalElement { n: self.n, restriction: self.restriction, mult }))
    }

    /// Parses either a tableau word (`1224`, letters past 9 as `(12)`) or a
    /// comma-separated multiplicity vector (`1,2,0,1`).
    pub fn parse(s: &str, n: usize, restriction: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if s.contains(',') {
            let mult = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad multiplicity entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return CrystalElement::new(n, mult, restriction);
        }
        let mut letters = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '1'..='9' => letters.push(c as usize - '0' as usize),
                '(' => {
                    let mut digits = String::new();
                    for d in chars.by_ref() {
                        if d == ')' {
                            break;
                        }
                        digits.push(d);
                    }
                    let v = digits
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter ({digits}")))?;
                    letters.push(v);
                }
                _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
            }
        }
        CrystalElement::from_letters(n, &letters, restriction)
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in self.letters() {
            if letter <= 9 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "({letter})")?;
            }
        }
        Ok(())
    }
}

/// Tensor-rule fold: `(eps_i, phi_i)` of a factor sequence.
fn fold_eps_phi(factors: &[CrystalElement], i: usize) -> (u32, u32) {
    let mut eps = 0u32;
    let mut phi = 0u32;
    for f in factors.iter().rev() {
        let (fe, fp) = (f.epsilon(i), f.phi(i));
        let new_eps = fe + eps.saturating_sub(fp);
        let new_phi = phi + fp.saturating_sub(eps);
        eps = new_eps;
        phi = new_phi;
    }
    (eps, phi)
}

fn check_pair(x: &CrystalElement, y: &CrystalElement) -> Result<()> {
    if x.n != y.n {
        return Err(Error::RankMismatch(x.n, y.n));
    }
    if x.restriction != y.restriction {
        return Err(Error::RestrictionMismatch(x.restriction, y.restriction));
    }
    Ok(())
}

/// `Q_i(x, y)`: minimum over split points of partial sums, indices cyclic
/// over the full alphabet.
fn q_quantity(x: &CrystalElement, y: &CrystalElement, i: usize) -> u32 {
    let w = x.n + 1;
    (1..=w)
        .map(|k| {
            let from_x: u32 = (1..k).map(|j| x.mult[(i + j - 1) % w]).sum();
            let from_y: u32 = (k + 1..=w).map(|j| y.mult[(i + j - 1) % w]).sum();
            from_x + from_y
        })
        .min()
        .expect("alphabet is nonempty")
}

/// Energy function `H(x (x) y) = min(l, m) - Q_0(x, y)`, normalized to
/// `0 <= H <= min(l, m)`.
pub fn energy(x: &CrystalElement, y: &CrystalElement) -> Result<u32> {
    check_pair(x, y)?;
    let h = x.len().min(y.len()) as i64 - q_quantity(x, y, 0) as i64;
    debug_assert!(h >= 0, "energy must be nonnegative");
    Ok(h as u32)
}

/// Combinatorial R on the classical part: `x (x) y ~ ytilde (x) xtilde`
/// with `xtilde_i = x_i + Q_i - Q_{i-1}` and `ytilde_i = y_i + Q_{i-1} - Q_i`.
/// Returns the image pair `(ytilde, xtilde)`.
pub fn combinatorial_r(
    x: &CrystalElement,
    y: &CrystalElement,
) -> Result<(CrystalElement, CrystalElement)> {
    check_pair(x, y)?;
    let w = x.n + 1;
    let qs: Vec<i64> = (0..w).map(|i| q_quantity(x, y, i) as i64).collect();
    let mut xt = vec![0u32; w];
    let mut yt = vec![0u32; w];
    for i in 1..=w {
        let q_i = qs[i % w];
        let q_prev = qs[i - 1];
        let xv = x.mult[i - 1] as i64 + q_i - q_prev;
        let yv = y.mult[i - 1] as i64 + q_prev - q_i;
        debug_assert!(xv >= 0 && yv >= 0, "R image must stay nonnegative");
        xt[i - 1] = xv as u32;
        yt[i - 1] = yv as u32;
    }
    let r = x.restriction;
    let ytilde = CrystalElement::new(x.n, yt, r).expect("R image is a valid element");
    let xtilde = CrystalElement::new(x.n, xt, r).expect("R image is a valid element");
    Ok((ytilde, xtilde))
}

/// Element `b[d]` of the affinization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub element: CrystalElement,
    pub mode: i64,
}

impl AffineElement {
    pub fn new(element: CrystalElement, mode: i64) -> Self {
        AffineElement { element, mode }
    }

    /// Parses `word[:mode]`; a missing mode defaults to 0.
    pub fn parse(s: &str, n: usize, restriction: usize) -> Result<Self> {
        let (word, mode) = match s.rsplit_once(':') {
            Some((w, m)) => {
                let mode = m
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad mode {m:?}")))?;
                (w, mode)
            }
            None => (s, 0),
        };
        Ok(AffineElement::new(CrystalElement::parse(word, n, restriction)?, mode))
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.element, self.mode)
    }
}

/// Affine combinatorial R:
/// `x[d] (x) y[e] -> ytilde[e - H] (x) xtilde[d + H]`.
pub fn affine_r(a: &AffineElement, b: &AffineElement) -> Result<(AffineElement, AffineElement)> {
    let h = energy(&a.element, &b.element)? as i64;
    let (yt, xt) = combinatorial_r(&a.element, &b.element)?;
    Ok((AffineElement::new(yt, b.mode - h), AffineElement::new(xt, a.mode + h)))
}

/// Ordered tensor product of crystal elements sharing rank and restriction.
/// May be empty; rank and restriction are carried explicitly so that empty
/// words stay well-typed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord {
    n: usize,
    restriction: usize,
    factors: Vec<CrystalElement>,
}

impl TensorWord {
    pub fn empty(n: usize, restriction: usize) -> Self {
        TensorWord { n, restriction, factors: Vec::new() }
    }

    pub fn new(n: usize, restriction: usize, factors: Vec<CrystalElement>) -> Result<Self> {
        for f in &factors {
            if f.n != n {
                return Err(Error::RankMismatch(f.n, n));
            }
            if f.restriction != restriction {
                return Err(Error::RestrictionMismatch(f.restriction, restriction));
            }
        }
        Ok(TensorWord { n, restriction, factors })
    }

    /// Builds a word from a nonempty factor list, taking rank and
    /// restriction from the first factor.
    pub fn from_factors(factors: Vec<CrystalElement>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidElement("empty factor list".into()))?;
        let (n, restriction) = (first.n, first.restriction);
        TensorWord::new(n, restriction, factors)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn restriction(&self) -> usize {
        self.restriction
    }

    pub fn factors(&self) -> &[CrystalElement] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Row lengths of the factors, left to right.
    pub fn shapes(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    /// Componentwise sum of factor weights.
    pub fn weight(&self) -> Vec<u32> {
        let mut acc = vec![0u32; self.n + 1];
        for f in &self.factors {
            for (a, &b) in acc.iter_mut().zip(f.mult.iter()) {
                *a += b;
            }
        }
        acc
    }

    /// Concatenation of all factor letters, used for canonical tie-breaks.
    pub fn concat_letters(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.letters()).collect()
    }

    pub fn with_restriction(&self, restriction: usize) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.with_restriction(restriction))
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorWord { n: self.n, restriction, factors })
    }

    pub fn shift_down(&self, shift: usize) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.shift_down(shift))
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorWord {
            n: self.n - shift,
            restriction: self.restriction.saturating_sub(shift),
            factors,
        })
    }

    pub fn shift_up(&self, shift: usize, new_n: usize) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.shift_up(shift, new_n))
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorWord { n: new_n, restriction: shift, factors })
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        fold_eps_phi(&self.factors, i).0
    }

    pub fn phi(&self, i: usize) -> u32 {
        fold_eps_phi(&self.factors, i).1
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i <= self.restriction || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
                restriction: self.restriction,
            });
        }
        Ok(())
    }

    /// Raising operator on the word by the tensor-product rule.
    pub fn tensor_e(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        let mut factors = self.factors.clone();
        if Self::act(&mut factors, i, true)? {
            Ok(Some(TensorWord { n: self.n, restriction: self.restriction, factors }))
        } else {
            Ok(None)
        }
    }

    /// Lowering operator on the word by the tensor-product rule.
    pub fn tensor_f(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        let mut factors = self.factors.clone();
        if Self::act(&mut factors, i, false)? {
            Ok(Some(TensorWord { n: self.n, restriction: self.restriction, factors }))
        } else {
            Ok(None)
        }
    }

    fn act(factors: &mut [CrystalElement], i: usize, raise: bool) -> Result<bool> {
        let Some((first, rest)) = factors.split_first_mut() else {
            return Ok(false);
        };
        let rest_eps = fold_eps_phi(rest, i).0;
        let on_first = if raise {
            first.phi(i) >= rest_eps
        } else {
            first.phi(i) > rest_eps
        };
        if on_first {
            let img = if raise { first.kashiwara_e(i)? } else { first.kashiwara_f(i)? };
            match img {
                Some(e) => {
                    *first = e;
                    Ok(true)
                }
                None => Ok(false),
            }
        } else {
            Self::act(rest, i, raise)
        }
    }

    /// True iff every classical raising operator above the restriction
    /// annihilates the word.
    pub fn is_highest(&self) -> bool {
        (self.restriction + 1..=self.n).all(|i| self.epsilon(i) == 0)
    }

    /// Parses a `*`-joined tensor word; the empty string is the empty word.
    pub fn parse(s: &str, n: usize, restriction: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TensorWord::empty(n, restriction));
        }
        let factors = s
            .split('*')
            .map(|t| CrystalElement::parse(t, n, restriction))
            .collect::<Result<Vec<_>>>()?;
        TensorWord::new(n, restriction, factors)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Ordered tensor product of affine elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineTensorWord {
    n: usize,
    restriction: usize,
    factors: Vec<AffineElement>,
}

impl AffineTensorWord {
    pub fn empty(n: usize, restriction: usize) -> Self {
        AffineTensorWord { n, restriction, factors: Vec::new() }
    }

    pub fn new(n: usize, restriction: usize, factors: Vec<AffineElement>) -> Result<Self> {
        for f in &factors {
            if f.element.n != n {
                return Err(Error::RankMismatch(f.element.n, n));
            }
            if f.element.restriction != restriction {
                return Err(Error::RestrictionMismatch(f.element.restriction, restriction));
            }
        }
        Ok(AffineTensorWord { n, restriction, factors })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn restriction(&self) -> usize {
        self.restriction
    }

    pub fn factors(&self) -> &[AffineElement] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn modes(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.mode).collect()
    }

    pub fn shapes(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.element.len()).collect()
    }

    /// Drops the modes.
    pub fn classical(&self) -> TensorWord {
        TensorWord {
            n: self.n,
            restriction: self.restriction,
            factors: self.factors.iter().map(|f| f.element.clone()).collect(),
        }
    }

    pub fn parse(s: &str, n: usize, restriction: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AffineTensorWord::empty(n, restriction));
        }
        let factors = s
            .split('*')
            .map(|t| AffineElement::parse(t, n, restriction))
            .collect::<Result<Vec<_>>>()?;
        AffineTensorWord::new(n, restriction, factors)
    }
}

impl fmt::Display for AffineTensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Moves `b` to the front of `prefix (x) b` by successive R applications.
/// Returns the front element `b^{(1)}` and the transformed prefix.
pub fn carry_left(prefix: &TensorWord, b: &CrystalElement) -> Result<(CrystalElement, TensorWord)> {
    let mut moving = b.clone();
    let mut rest = prefix.factors.clone();
    for j in (0..rest.len()).rev() {
        let (front, stays) = combinatorial_r(&rest[j], &moving)?;
        moving = front;
        rest[j] = stays;
    }
    Ok((moving, TensorWord { n: prefix.n, restriction: prefix.restriction, factors: rest }))
}

/// All elements of `B_l` at the given rank and restriction, in a fixed order.
pub fn all_elements(n: usize, l: u32, restriction: usize) -> Vec<CrystalElement> {
    let mut out = Vec::new();
    let mut mult = vec![0u32; n + 1];
    fn rec(
        mult: &mut Vec<u32>,
        pos: usize,
        remaining: u32,
        n: usize,
        restriction: usize,
        out: &mut Vec<CrystalElement>,
    ) {
        if pos == n {
            mult[pos] = remaining;
            if restriction <= n {
                out.push(CrystalElement {
                    n,
                    restriction,
                    mult: mult.clone(),
                });
            }
            mult[pos] = 0;
            return;
        }
        let top = if pos < restriction { 0 } else { remaining };
        for c in 0..=top {
            mult[pos] = c;
            rec(mult, pos + 1, remaining - c, n, restriction, out);
        }
        mult[pos] = 0;
    }
    if l >= 1 {
        rec(&mut mult, 0, l, n, restriction, &mut out);
    }
    // Restriction can force the tail entry; filter out violations.
    out.retain(|e| e.mult[..e.restriction].iter().all(|&c| c == 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, mult: &[u32]) -> CrystalElement {
        CrystalElement::new(n, mult.to_vec(), 0).unwrap()
    }

    #[test]
    fn weight_is_multiplicity_vector() {
        let x = el(3, &[1, 2, 0, 1]);
        assert_eq!(x.weight(), &[1, 2, 0, 1]);
        let y = el(3, &[3, 0, 0, 0]);
        assert_eq!(y.weight(), &[3, 0, 0, 0]);
        let w = TensorWord::from_factors(vec![
            CrystalElement::parse("111", 3, 0).unwrap(),
            CrystalElement::parse("22", 3, 0).unwrap(),
        ])
        .unwrap();
        assert_eq!(w.weight(), vec![3, 2, 0, 0]);
    }

    #[test]
    fn kashiwara_e_basics() {
        let two = el(3, &[0, 1, 0, 0]);
        assert_eq!(two.kashiwara_e(1).unwrap(), Some(el(3, &[1, 0, 0, 0])));
        let one = el(3, &[1, 0, 0, 0]);
        assert_eq!(one.kashiwara_e(1).unwrap(), None);
        let x = el(3, &[1, 2, 0, 1]);
        assert_eq!(x.kashiwara_e(2).unwrap(), None);
        assert!(x.kashiwara_e(0).is_err());
        assert!(x.kashiwara_e(4).is_err());
    }

    #[test]
    fn kashiwara_f_basics() {
        let one = el(3, &[1, 0, 0, 0]);
        assert_eq!(one.kashiwara_f(1).unwrap(), Some(el(3, &[0, 1, 0, 0])));
        let four = el(3, &[0, 0, 0, 1]);
        assert_eq!(four.kashiwara_f(3).unwrap(), None);
        let x = el(3, &[1, 1, 0, 0]);
        assert_eq!(x.kashiwara_f(2).unwrap(), Some(el(3, &[1, 0, 1, 0])));
    }

    #[test]
    fn e_and_f_are_mutually_inverse() {
        for x in all_elements(2, 3, 0) {
            for i in 1..=2 {
                if let Some(y) = x.kashiwara_f(i).unwrap() {
                    assert_eq!(y.kashiwara_e(i).unwrap(), Some(x.clone()));
                }
                if let Some(y) = x.kashiwara_e(i).unwrap() {
                    assert_eq!(y.kashiwara_f(i).unwrap(), Some(x.clone()));
                }
            }
        }
    }

    #[test]
    fn energy_examples() {
        let x = CrystalElement::parse("1224", 3, 0).unwrap();
        let y = CrystalElement::parse("13", 3, 0).unwrap();
        assert_eq!(energy(&x, &y).unwrap(), 1);

        let t33 = CrystalElement::parse("33", 3, 2).unwrap();
        let t4 = CrystalElement::parse("4", 3, 2).unwrap();
        let t3 = CrystalElement::parse("3", 3, 2).unwrap();
        assert_eq!(energy(&t33, &t4).unwrap(), 0);
        assert_eq!(energy(&t33, &t33).unwrap(), 2);
        assert_eq!(energy(&t33, &t3).unwrap(), 1);

        // (n+1)^l (x) (n+1)^m has energy min(l, m) at every rank.
        for n in 1..=3 {
            for l in 1..=3 {
                for m in 1..=3 {
                    let a = CrystalElement::row(n, n + 1, l, n).unwrap();
                    let b = CrystalElement::row(n, n + 1, m, n).unwrap();
                    assert_eq!(energy(&a, &b).unwrap(), l.min(m));
                }
            }
        }
    }

    #[test]
    fn combinatorial_r_worked_example() {
        let x = CrystalElement::parse("1224", 3, 0).unwrap();
        let y = CrystalElement::parse("13", 3, 0).unwrap();
        let (yt, xt) = combinatorial_r(&x, &y).unwrap();
        assert_eq!(yt.to_string(), "24");
        assert_eq!(xt.to_string(), "1123");
    }

    #[test]
    fn combinatorial_r_identity_on_equal_shapes() {
        let x = CrystalElement::parse("1224", 3, 0).unwrap();
        let (yt, xt) = combinatorial_r(&x, &x).unwrap();
        assert_eq!(yt, x);
        assert_eq!(xt, x);
        // Equal lengths with distinct content: still the identity map.
        let a = CrystalElement::parse("12", 1, 0).unwrap();
        let b = CrystalElement::parse("11", 1, 0).unwrap();
        let (yt, xt) = combinatorial_r(&a, &b).unwrap();
        assert_eq!((yt, xt), (a, b));
    }

    #[test]
    fn combinatorial_r_restricted_pair() {
        let x = CrystalElement::parse("33", 3, 2).unwrap();
        let y = CrystalElement::parse("4", 3, 2).unwrap();
        let (yt, xt) = combinatorial_r(&x, &y).unwrap();
        assert_eq!(yt.to_string(), "3");
        assert_eq!(xt.to_string(), "34");
    }

    #[test]
    fn affine_r_worked_example() {
        let a = AffineElement::parse("1224:5", 3, 0).unwrap();
        let b = AffineElement::parse("13:9", 3, 0).unwrap();
        let (bt, at) = affine_r(&a, &b).unwrap();
        assert_eq!(bt.to_string(), "24:8");
        assert_eq!(at.to_string(), "1123:6");
    }

    #[test]
    fn affine_r_equal_lengths_swaps_modes() {
        // Classically the identity, but the modes shift by the energy.
        let a = AffineElement::parse("1224:5", 3, 0).unwrap();
        let b = AffineElement::parse("1224:9", 3, 0).unwrap();
        let (u, v) = affine_r(&a, &b).unwrap();
        assert_eq!(u.to_string(), "1224:7");
        assert_eq!(v.to_string(), "1224:7");
    }

    #[test]
    fn affine_r_degenerate_alphabet() {
        let a = AffineElement::new(CrystalElement::row(3, 4, 1, 3).unwrap(), 1);
        let b = AffineElement::new(CrystalElement::row(3, 4, 1, 3).unwrap(), 0);
        let (bt, at) = affine_r(&a, &b).unwrap();
        assert_eq!(bt.mode, -1);
        assert_eq!(at.mode, 2);
    }

    #[test]
    fn tensor_action_basics() {
        let one = CrystalElement::parse("1", 1, 0).unwrap();
        let w = TensorWord::from_factors(vec![one.clone(), one.clone()]).unwrap();
        let lowered = w.tensor_f(1).unwrap().unwrap();
        assert_eq!(lowered.to_string(), "2*1");
        assert_eq!(w.tensor_e(1).unwrap(), None);
    }

    #[test]
    fn tensor_e_and_f_inverse_on_words() {
        let elems = all_elements(2, 2, 0);
        for a in &elems {
            for b in &elems {
                let w = TensorWord::from_factors(vec![a.clone(), b.clone()]).unwrap();
                for i in 1..=2 {
                    if let Some(v) = w.tensor_f(i).unwrap() {
                        assert_eq!(v.tensor_e(i).unwrap(), Some(w.clone()));
                    }
                    if let Some(v) = w.tensor_e(i).unwrap() {
                        assert_eq!(v.tensor_f(i).unwrap(), Some(w.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn highest_words() {
        let p = TensorWord::parse("111*22*3*1*4*2*3", 3, 0).unwrap();
        assert!(p.is_highest());
        for i in 1..=3 {
            assert_eq!(p.tensor_e(i).unwrap(), None);
        }
        let w = TensorWord::parse("2*1", 1, 0).unwrap();
        assert!(!w.is_highest());
        let r = TensorWord::parse("33*4", 3, 2).unwrap();
        assert!(r.is_highest());
    }

    #[test]
    fn carry_left_examples() {
        let b = CrystalElement::parse("4", 3, 1).unwrap();
        let empty = TensorWord::empty(3, 1);
        let (front, rest) = carry_left(&empty, &b).unwrap();
        assert_eq!(front, b);
        assert!(rest.is_empty());

        // Alphabet {2,3,4}: carrying 4 through 22 (x) 23 surfaces a 2.
        let prefix = TensorWord::parse("22*23", 3, 1).unwrap();
        let (front, rest) = carry_left(&prefix, &b).unwrap();
        assert_eq!(front.to_string(), "2");
        assert_eq!(rest.to_string(), "23*24");

        // Alphabet {3,4}: carrying 4 through 33 surfaces a 3.
        let prefix = TensorWord::parse("33", 3, 2).unwrap();
        let b = CrystalElement::parse("4", 3, 2).unwrap();
        let (front, rest) = carry_left(&prefix, &b).unwrap();
        assert_eq!(front.to_string(), "3");
        assert_eq!(rest.to_string(), "34");
    }

    #[test]
    fn parse_and_render_round_trip() {
        let x = CrystalElement::parse("1,2,0,1", 3, 0).unwrap();
        assert_eq!(x.to_string(), "1224");
        let y = CrystalElement::parse("1224", 3, 0).unwrap();
        assert_eq!(x, y);
        // Large alphabets render letters past 9 in parentheses.
        let z = CrystalElement::from_letters(11, &[1, 10, 12], 0).unwrap();
        assert_eq!(z.to_string(), "1(10)(12)");
        let back = CrystalElement::parse("1(10)(12)", 11, 0).unwrap();
        assert_eq!(z, back);
        let aw = AffineTensorWord::parse("1223:5*34:8*1:6", 3, 0).unwrap();
        assert_eq!(aw.to_string(), "1223:5*34:8*1:6");
    }

    #[test]
    fn element_counts() {
        assert_eq!(all_elements(3, 1, 0).len(), 4);
        assert_eq!(all_elements(2, 2, 0).len(), 6);
        assert_eq!(all_elements(3, 2, 2).len(), 3); // letters {3,4}: 33, 34, 44
        assert_eq!(all_elements(3, 5, 3).len(), 1); // letters {4}: 44444
    }
}
