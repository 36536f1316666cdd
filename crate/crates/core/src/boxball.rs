//! Box-ball soliton cellular automaton on semi-infinite `B_1` words with an
//! all-`1` right boundary: carrier time evolutions, soliton content,
//! scattering data and inverse scattering.

use crate::classical;
use crate::crystal::{combinatorial_r, AffineTensorWord, CrystalElement, TensorWord};
use crate::error::{Error, Result};
use crate::rigged::RiggedConfiguration;
use crate::vertex;

/// Finite window of a box-ball state; the state continues with letter-`1`
/// boxes to the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxBallState {
    n: usize,
    window: TensorWord,
}

impl BoxBallState {
    pub fn new(window: TensorWord) -> Result<Self> {
        if window.restriction() != 0 {
            return Err(Error::RestrictionMismatch(window.restriction(), 0));
        }
        if window.factors().iter().any(|f| f.len() != 1) {
            return Err(Error::ShapeMismatch("box-ball windows consist of single boxes".into()));
        }
        Ok(BoxBallState { n: window.rank(), window })
    }

    /// Parses a bare digit string such as `11122211`, letters past 9 in
    /// parentheses.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut out = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                '1'..='9' => c as usize - '0' as usize,
                '(' => {
                    let mut digits = String::new();
                    for d in chars.by_ref() {
                        if d == ')' {
                            break;
                        }
                        digits.push(d);
                    }
                    digits
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter ({digits}")))?
                }
                _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            };
            out.push(CrystalElement::from_letters(n, &[letter], 0)?);
        }
        BoxBallState::new(TensorWord::new(n, 0, out)?)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &TensorWord {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    fn letters(&self) -> Vec<usize> {
        self.window.factors().iter().map(|f| f.letters()[0]).collect()
    }

    /// Drops all trailing vacuum boxes.
    pub fn normalized(&self) -> Self {
        let letters = self.letters();
        let keep = letters.iter().rposition(|&c| c != 1).map_or(0, |i| i + 1);
        let factors = self.window.factors()[..keep].to_vec();
        BoxBallState {
            n: self.n,
            window: TensorWord::new(self.n, 0, factors).expect("prefix of a valid window"),
        }
    }

    /// Renders exactly `width` boxes, extending with the vacuum as needed.
    pub fn render_window(&self, width: usize) -> String {
        let mut out = String::new();
        let letters = self.letters();
        for i in 0..width {
            let letter = letters.get(i).copied().unwrap_or(1);
            if letter <= 9 {
                out.push_str(&letter.to_string());
            } else {
                out.push_str(&format!("({letter})"));
            }
        }
        out
    }

    pub fn is_highest(&self) -> bool {
        self.window.is_highest()
    }

    /// One time step `T_l`. The window is padded on the right until the
    /// carrier unloads completely, then trailing vacuum beyond `2l` boxes
    /// is trimmed.
    pub fn evolve(&self, l: u32) -> Result<Self> {
        let evolved = evolve_word(&self.window, l)?;
        let letters: Vec<usize> = evolved.factors().iter().map(|f| f.letters()[0]).collect();
        let content_end = letters.iter().rposition(|&c| c != 1).map_or(0, |i| i + 1);
        let keep = letters.len().min(content_end + 2 * l as usize);
        let factors = evolved.factors()[..keep].to_vec();
        BoxBallState::new(TensorWord::new(self.n, 0, factors)?)
    }

    /// States at times `0..=steps`.
    pub fn evolve_trace(&self, l: u32, steps: u32) -> Result<Vec<Self>> {
        let mut out = vec![self.clone()];
        for _ in 0..steps {
            out.push(out.last().expect("nonempty").evolve(l)?);
        }
        Ok(out)
    }

    /// Soliton amplitudes: the first configuration level of the state's
    /// rigged configuration.
    pub fn soliton_content(&self) -> Result<Vec<u32>> {
        let rc = classical::path_to_rc(&self.window)?;
        Ok(rc.mu(1).to_vec())
    }

    /// Scattering data: the normal-ordered soliton word with
    /// position-encoding modes.
    pub fn scattering_data(&self) -> Result<AffineTensorWord> {
        let rc = classical::path_to_rc(&self.window)?;
        let p1 = vertex::intermediate_path(&rc, 1)?;
        if p1.is_empty() {
            return Ok(AffineTensorWord::empty(self.n, 1));
        }
        let ordering = vertex::map_c(1, rc.mu(1), rc.riggings(1), &p1)?;
        Ok(ordering.canonical().clone())
    }

    /// Per-step action-angle data over an evolution trace.
    pub fn action_angle_report(&self, l: u32, steps: u32) -> Result<ActionAngleReport> {
        let trace = self.evolve_trace(l, steps)?;
        let mut rows = Vec::new();
        let mut violations = Vec::new();
        for (t, state) in trace.iter().enumerate() {
            if !state.is_highest() {
                violations.push(format!("step {t}: state is not highest"));
                continue;
            }
            let rc = classical::path_to_rc(&state.window)?;
            rows.push(ActionAngleRow {
                t: t as u32,
                window_len: state.len(),
                rc: rc.canonical(),
            });
        }
        if let Some(first) = rows.first() {
            let base = first.rc.clone();
            for row in &rows[1..] {
                for a in 1..=base.n {
                    if row.rc.mu(a) != base.mu(a) {
                        violations.push(format!(
                            "step {}: mu^({}) changed from {:?} to {:?}",
                            row.t,
                            a,
                            base.mu(a),
                            row.rc.mu(a)
                        ));
                    }
                }
                let t = row.t as i64;
                for (i, &len) in base.mu(1).iter().enumerate() {
                    let expect = base.riggings(1)[i] + t * l.min(len) as i64;
                    let got = row.rc.riggings(1)[i];
                    if got != expect {
                        violations.push(format!(
                            "step {}: rigging {} of length-{} row is {}, expected {}",
                            row.t, i, len, got, expect
                        ));
                    }
                }
            }
        }
        Ok(ActionAngleReport { carrier: l, rows, violations })
    }

    /// Inverse scattering: the state whose window is the image of the
    /// rigged configuration. Requires a single-box quantum space.
    pub fn inverse_scattering(rc: &RiggedConfiguration) -> Result<Self> {
        if rc.mu0.iter().any(|&r| r != 1) {
            return Err(Error::ShapeMismatch(
                "box-ball states need mu0 = (1, 1, ..., 1)".into(),
            ));
        }
        BoxBallState::new(vertex::rc_to_path(rc)?)
    }
}

impl std::fmt::Display for BoxBallState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render_window(self.len()))
    }
}

#[derive(Debug, Clone)]
pub struct ActionAngleRow {
    pub t: u32,
    pub window_len: usize,
    pub rc: RiggedConfiguration,
}

#[derive(Debug, Clone)]
pub struct ActionAngleReport {
    pub carrier: u32,
    pub rows: Vec<ActionAngleRow>,
    pub violations: Vec<String>,
}

impl ActionAngleReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Carrier pass `u_l (x) p ~ T_l(p) (x) u'_l` over a `B_1` word, with the
/// carrier entering from the left. The output is extended with vacuum boxes
/// until the carrier returns to `1^l`.
pub fn evolve_word(word: &TensorWord, l: u32) -> Result<TensorWord> {
    if l == 0 {
        return Err(Error::ShapeMismatch("carrier capacity must be >= 1".into()));
    }
    let n = word.rank();
    let vacuum_carrier = CrystalElement::row(n, 1, l, 0)?;
    let vacuum_box = CrystalElement::row(n, 1, 1, 0)?;
    let mut carrier = vacuum_carrier.clone();
    let mut out = Vec::with_capacity(word.len());
    for site in word.factors() {
        let (new_site, new_carrier) = combinatorial_r(&carrier, site)?;
        out.push(new_site);
        carrier = new_carrier;
    }
    let mut budget = word.len() + l as usize + 8;
    while carrier != vacuum_carrier {
        let (new_site, new_carrier) = combinatorial_r(&carrier, &vacuum_box)?;
        out.push(new_site);
        carrier = new_carrier;
        budget -= 1;
        assert!(budget > 0, "carrier failed to unload");
    }
    TensorWord::new(n, word.restriction(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigged::Level;

    #[test]
    fn single_ball_moves_one_step() {
        let s = BoxBallState::parse("2111", 1).unwrap();
        let t = s.evolve(1).unwrap();
        assert_eq!(t.normalized().to_string(), "12");
    }

    #[test]
    fn vacuum_is_fixed() {
        let s = BoxBallState::parse("1111", 2).unwrap();
        let t = s.evolve(3).unwrap();
        assert!(t.normalized().is_empty());
        assert_eq!(t.render_window(4), "1111");
    }

    #[test]
    fn evolution_conserves_weight_and_highestness() {
        let s = BoxBallState::parse("1122123111", 2).unwrap();
        assert!(s.is_highest());
        let t = s.evolve(2).unwrap();
        assert!(t.is_highest());
        let count = |st: &BoxBallState, c: usize| {
            st.window().factors().iter().filter(|f| f.letters()[0] == c).count()
        };
        for c in 2..=3 {
            assert_eq!(count(&s, c), count(&t, c));
        }
    }

    #[test]
    fn steps_zero_is_identity() {
        let s = BoxBallState::parse("2211", 1).unwrap();
        let trace = s.evolve_trace(1, 0).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0], s);
    }

    #[test]
    fn commuting_evolutions() {
        let s = BoxBallState::parse("1222111331111", 2).unwrap();
        let a = s.evolve(2).unwrap().evolve(3).unwrap();
        let b = s.evolve(3).unwrap().evolve(2).unwrap();
        assert_eq!(a.normalized(), b.normalized());
    }

    #[test]
    fn commuting_evolutions_on_random_highest_states() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in 1..=3usize {
            let mut found = 0;
            while found < 10 {
                let len = rng.gen_range(4..=20);
                let word: String = (0..len)
                    .map(|_| {
                        // Bias toward the vacuum letter so highest words
                        // show up at a reasonable rate.
                        let letter = if rng.gen_bool(0.6) {
                            1
                        } else {
                            rng.gen_range(2..=n + 1)
                        };
                        char::from_digit(letter as u32, 10).expect("single digit")
                    })
                    .collect();
                let Ok(state) = BoxBallState::parse(&word, n) else { continue };
                if !state.is_highest() {
                    continue;
                }
                found += 1;
                for l in 1..=3u32 {
                    for m in 1..=3u32 {
                        let a = state.evolve(l).unwrap().evolve(m).unwrap();
                        let b = state.evolve(m).unwrap().evolve(l).unwrap();
                        assert_eq!(a.normalized(), b.normalized(), "word {word} l={l} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn soliton_content_of_vacuum_is_empty() {
        let s = BoxBallState::parse("111", 3).unwrap();
        assert!(s.soliton_content().unwrap().is_empty());
        assert!(s.scattering_data().unwrap().is_empty());
    }

    #[test]
    fn inverse_scattering_requires_single_boxes() {
        let rc = RiggedConfiguration::vacuum(2, vec![2, 1]);
        assert!(BoxBallState::inverse_scattering(&rc).is_err());
        let rc = RiggedConfiguration::vacuum(2, vec![1, 1]);
        let s = BoxBallState::inverse_scattering(&rc).unwrap();
        assert_eq!(s.to_string(), "11");
    }

    #[test]
    fn vacuum_action_angle_is_trivial() {
        let s = BoxBallState::parse("1111", 2).unwrap();
        let report = s.action_angle_report(2, 3).unwrap();
        assert!(report.ok());
        assert!(report.rows.iter().all(|r| r.rc.mu(1).is_empty()));
    }

    #[test]
    fn scattering_round_trip_reproduces_modes() {
        let rc = RiggedConfiguration::new(
            3,
            vec![1; 13],
            vec![
                Level::new(vec![4, 3, 1], vec![0, 1, 4]),
                Level::new(vec![2, 1], vec![0, 0]),
                Level::new(vec![1], vec![0]),
            ],
        )
        .unwrap();
        let state = BoxBallState::inverse_scattering(&rc).unwrap();
        let data = state.scattering_data().unwrap();
        let p1 = crate::vertex::intermediate_path(&rc, 1).unwrap();
        let direct = crate::vertex::map_c(1, rc.mu(1), rc.riggings(1), &p1).unwrap();
        assert_eq!(data.modes(), direct.modes);
        assert_eq!(&data, direct.canonical());
    }

    #[test]
    fn scattering_data_of_sample_path() {
        let rc = RiggedConfiguration::new(
            3,
            vec![1; 13],
            vec![
                Level::new(vec![4, 3, 1], vec![0, 1, 4]),
                Level::new(vec![2, 1], vec![0, 0]),
                Level::new(vec![1], vec![0]),
            ],
        )
        .unwrap();
        let s = BoxBallState::inverse_scattering(&rc).unwrap();
        assert_eq!(s.to_string(), "1111223214322");
        let data = s.scattering_data().unwrap();
        assert_eq!(data.classical().to_string(), "2222*233*4");
    }
}
