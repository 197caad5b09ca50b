//! Chart movies: letter-exact rewrites from a·b to b·a by elementary moves.
//!
//! Degree-4 vertices of a chart are far commutations and white vertices are
//! braid relations, so a chart without black vertices on the torus is
//! recorded as a sequence of such moves sweeping the square.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::garside::{braids_equal, commute_check};

/// Default bound on words visited by one shortest-movie search.
pub const STATE_CAP: usize = 5_000_000;

/// Positions are zero-based indices into the current word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Swap the letters at `p`, `p + 1`; their indices differ by at least 2.
    FarSwap(usize),
    /// Rewrite σ_i σ_j σ_i at `p` as σ_j σ_i σ_j. `ascending` means j = i + 1.
    R3 { position: usize, ascending: bool },
    /// Delete an inverse pair at `p`, `p + 1`.
    CancelPair(usize),
    /// Insert σ_index^sign σ_index^-sign before position `p`.
    InsertPair { position: usize, index: usize, positive: bool },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::FarSwap(p) => write!(f, "FS {p}"),
            Move::R3 { position, ascending } => {
                write!(f, "R3 {position} {}", if ascending { '+' } else { '-' })
            }
            Move::CancelPair(p) => write!(f, "CP {p}"),
            Move::InsertPair { position, index, positive } => {
                write!(f, "IP {position} {index} {}", if positive { 1 } else { -1 })
            }
        }
    }
}

impl Move {
    fn shifted(self, offset: usize) -> Move {
        match self {
            Move::FarSwap(p) => Move::FarSwap(p + offset),
            Move::R3 { position, ascending } => Move::R3 { position: position + offset, ascending },
            Move::CancelPair(p) => Move::CancelPair(p + offset),
            Move::InsertPair { position, index, positive } => {
                Move::InsertPair { position: position + offset, index, positive }
            }
        }
    }

    /// Apply in place, or explain why the move is illegal here.
    pub fn apply(self, word: &mut Vec<Letter>, degree: usize) -> std::result::Result<(), String> {
        let need = |p: usize, k: usize, word: &Vec<Letter>| {
            if p + k > word.len() {
                Err(format!("window {p}..{} runs past word length {}", p + k, word.len()))
            } else {
                Ok(())
            }
        };
        match self {
            Move::FarSwap(p) => {
                need(p, 2, word)?;
                let (x, y) = (word[p], word[p + 1]);
                if x.index().abs_diff(y.index()) < 2 {
                    return Err(format!("letters {x} and {y} at {p} do not commute"));
                }
                word.swap(p, p + 1);
            }
            Move::R3 { position: p, ascending } => {
                need(p, 3, word)?;
                let (x, y, z) = (word[p], word[p + 1], word[p + 2]);
                if x != z {
                    return Err(format!("window at {p} is not of the form s t s"));
                }
                if x.is_positive() != y.is_positive() {
                    return Err(format!("window at {p} mixes letter signs"));
                }
                let (i, j) = (x.index(), y.index());
                if i.abs_diff(j) != 1 {
                    return Err(format!("window at {p} has index gap {}", i.abs_diff(j)));
                }
                if (j > i) != ascending {
                    return Err(format!("window at {p} does not match direction"));
                }
                word[p] = y;
                word[p + 1] = x;
                word[p + 2] = y;
            }
            Move::CancelPair(p) => {
                need(p, 2, word)?;
                if word[p] != word[p + 1].inverse() {
                    return Err(format!("letters at {p} are not an inverse pair"));
                }
                word.drain(p..p + 2);
            }
            Move::InsertPair { position, index, positive } => {
                if position > word.len() {
                    return Err(format!("insert position {position} past end"));
                }
                if index < 1 || index >= degree {
                    return Err(format!("generator index {index} out of range"));
                }
                let l = Letter::new(index, positive);
                word.splice(position..position, [l, l.inverse()]);
            }
        }
        Ok(())
    }
}

/// A movie from `a·b` to `b·a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartMovie {
    pub degree: usize,
    pub a: BraidWord,
    pub b: BraidWord,
    pub steps: Vec<Move>,
}

impl ChartMovie {
    pub fn start_word(&self) -> Vec<Letter> {
        self.a.letters().iter().chain(self.b.letters()).copied().collect()
    }

    pub fn end_word(&self) -> Vec<Letter> {
        self.b.letters().iter().chain(self.a.letters()).copied().collect()
    }

    pub fn r3_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Move::R3 { .. })).count()
    }

    /// Call `visit(step_index, word_before_step, step)` for every step,
    /// failing at the first illegal one.
    pub fn replay<F>(&self, mut visit: F) -> Result<Vec<Letter>>
    where
        F: FnMut(usize, &[Letter], Move),
    {
        if self.a.degree() != self.degree || self.b.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.a.degree(), right: self.b.degree() });
        }
        let mut word = self.start_word();
        for (k, &step) in self.steps.iter().enumerate() {
            visit(k, &word, step);
            step.apply(&mut word, self.degree)
                .map_err(|reason| Error::IllegalMove { step: k, reason })?;
        }
        Ok(word)
    }

    /// Line format:
    ///
    /// ```text
    /// degree 4
    /// a: 1 2 2 2 3
    /// b: 1 2 3 1 2 3 1 2 3 1 2 3
    /// FS 3
    /// R3 0 +
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("degree {}\na: {}\nb: {}\n", self.degree, self.a, self.b);
        for s in &self.steps {
            out.push_str(&format!("{s}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ChartMovie> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let mut header = |key: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| Error::Malformed(format!("missing {key} line")))?;
            line.strip_prefix(key)
                .map(|rest| rest.trim().to_string())
                .ok_or_else(|| Error::Malformed(format!("expected {key:?}, got {line:?}")))
        };
        let degree: usize = header("degree")?
            .parse()
            .map_err(|_| Error::Malformed("degree must be a non-negative integer".into()))?;
        let a = parse_braid(&header("a:")?, degree)?;
        let b = parse_braid(&header("b:")?, degree)?;
        let mut steps = Vec::new();
        for line in lines {
            steps.push(parse_move(line)?);
        }
        Ok(ChartMovie { degree, a, b, steps })
    }
}

fn parse_move(line: &str) -> Result<Move> {
    let bad = || Error::Malformed(format!("bad movie step {line:?}"));
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let num = |k: usize| -> Result<usize> { tokens.get(k).ok_or_else(bad)?.parse().map_err(|_| bad()) };
    let mv = match tokens.first().copied() {
        Some("FS") if tokens.len() == 2 => Move::FarSwap(num(1)?),
        Some("R3") if tokens.len() == 3 => {
            let ascending = match tokens[2] {
                "+" => true,
                "-" => false,
                _ => return Err(bad()),
            };
            Move::R3 { position: num(1)?, ascending }
        }
        Some("CP") if tokens.len() == 2 => Move::CancelPair(num(1)?),
        Some("IP") if tokens.len() == 4 => {
            let positive = match tokens[3] {
                "1" | "+1" | "+" => true,
                "-1" | "-" => false,
                _ => return Err(bad()),
            };
            Move::InsertPair { position: num(1)?, index: num(2)?, positive }
        }
        _ => return Err(bad()),
    };
    Ok(mv)
}

/// Replay every step and compare the final word with b·a letter by letter.
pub fn validate_movie(mv: &ChartMovie) -> Result<()> {
    let end = mv.replay(|_, _, _| {})?;
    if end != mv.end_word() {
        return Err(Error::IllegalMove {
            step: mv.steps.len(),
            reason: "final word differs from b·a".into(),
        });
    }
    Ok(())
}

/// Tie-breaking for the shortest-movie search. Different orders give
/// different, equally short movies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchOrder {
    #[default]
    LeftFirst,
    RightFirst,
}

/// Build a movie by sliding the letters of `a`, last first, rightward
/// through `b`.
///
/// Each slide rewrites σ_k·b into b·σ_j using far commutations and as few
/// braid relations as possible; a leftover rewrite turns the slid letters
/// back into `a` verbatim. Both words must be positive, or both negative.
pub fn slide_movie(a: &BraidWord, b: &BraidWord) -> Result<ChartMovie> {
    slide_movie_with(a, b, SearchOrder::LeftFirst, STATE_CAP)
}

pub fn slide_movie_with(
    a: &BraidWord,
    b: &BraidWord,
    order: SearchOrder,
    cap: usize,
) -> Result<ChartMovie> {
    let m = a.degree();
    if b.degree() != m {
        return Err(Error::DegreeMismatch { left: m, right: b.degree() });
    }
    if !commute_check(a, b)? {
        return Err(Error::NotCommuting);
    }
    let mut movie = ChartMovie { degree: m, a: a.clone(), b: b.clone(), steps: Vec::new() };
    if a.is_empty() || b.is_empty() {
        return Ok(movie);
    }
    let uniform = (a.is_positive() && b.is_positive()) || (a.is_negative() && b.is_negative());
    if !uniform {
        return Err(Error::MovieGeneration(
            "boundary braids must be both positive or both negative".into(),
        ));
    }

    let r = a.len();
    let blen = b.len();
    let mut slid: Vec<Letter> = Vec::with_capacity(r);
    let mut cache: HashMap<Letter, (Letter, Vec<Move>)> = HashMap::new();
    for t in (0..r).rev() {
        let letter = a.letters()[t];
        if !cache.contains_key(&letter) {
            let target = exit_letter(letter, b)?;
            let mut start = vec![letter];
            start.extend_from_slice(b.letters());
            let mut goal = b.letters().to_vec();
            goal.push(target);
            let path = shortest_rewrite(&start, &goal, order, cap)?;
            cache.insert(letter, (target, path));
        }
        let (target, path) = &cache[&letter];
        movie.steps.extend(path.iter().map(|s| s.shifted(t)));
        slid.insert(0, *target);
    }
    if slid != a.letters() {
        let path = shortest_rewrite(&slid, a.letters(), order, cap)?;
        movie.steps.extend(path.iter().map(|s| s.shifted(blen)));
    }
    validate_movie(&movie)?;
    Ok(movie)
}

/// The letter σ_j with σ_k·b = b·σ_j, if one exists.
fn exit_letter(letter: Letter, b: &BraidWord) -> Result<Letter> {
    let m = b.degree();
    let lhs = BraidWord::new(m, vec![letter])?.product(b)?;
    for j in 1..m {
        let candidate = Letter::new(j, letter.is_positive());
        let rhs = b.product(&BraidWord::new(m, vec![candidate])?)?;
        if braids_equal(&lhs, &rhs)? {
            return Ok(candidate);
        }
    }
    Err(Error::MovieGeneration(format!(
        "letter {letter} cannot slide through b as a single letter"
    )))
}

/// Fewest braid-relation moves turning `start` into `goal`, with free far
/// commutations (0-1 breadth-first search over words of equal length).
fn shortest_rewrite(
    start: &[Letter],
    goal: &[Letter],
    order: SearchOrder,
    cap: usize,
) -> Result<Vec<Move>> {
    let encode = |w: &[Letter]| -> Vec<i8> { w.iter().map(|l| l.signed() as i8).collect() };
    let start = encode(start);
    let goal = encode(goal);
    if start.len() != goal.len() {
        return Err(Error::MovieGeneration("words differ in length".into()));
    }
    let n = start.len();

    // per state: (distance, parent state, move into it)
    let mut states: Vec<Vec<i8>> = vec![start.clone()];
    let mut info: Vec<(usize, usize, Option<Move>)> = vec![(0, usize::MAX, None)];
    let mut index: HashMap<Vec<i8>, usize> = HashMap::from([(start, 0)]);
    let mut done: Vec<bool> = vec![false];
    let mut queue = VecDeque::from([0usize]);

    let positions: Vec<usize> = match order {
        SearchOrder::LeftFirst => (0..n).collect(),
        SearchOrder::RightFirst => (0..n).rev().collect(),
    };

    while let Some(s) = queue.pop_front() {
        if done[s] {
            continue;
        }
        done[s] = true;
        if states[s] == goal {
            let mut path = Vec::new();
            let mut cur = s;
            while let (_, parent, Some(mv)) = info[cur] {
                path.push(mv);
                cur = parent;
            }
            path.reverse();
            return Ok(path);
        }
        let dist = info[s].0;
        let word = states[s].clone();
        for &p in &positions {
            let mut next: Vec<(Vec<i8>, Move, usize)> = Vec::with_capacity(2);
            if p + 1 < n && (word[p].abs() - word[p + 1].abs()).abs() >= 2 {
                let mut w = word.clone();
                w.swap(p, p + 1);
                next.push((w, Move::FarSwap(p), 0));
            }
            if p + 2 < n {
                let (x, y, z) = (word[p], word[p + 1], word[p + 2]);
                if x == z && (x > 0) == (y > 0) && (x.abs() - y.abs()).abs() == 1 {
                    let mut w = word.clone();
                    w[p] = y;
                    w[p + 1] = x;
                    w[p + 2] = y;
                    next.push((w, Move::R3 { position: p, ascending: y.abs() > x.abs() }, 1));
                }
            }
            for (w, mv, cost) in next {
                let nd = dist + cost;
                match index.get(&w) {
                    Some(&k) => {
                        if !done[k] && nd < info[k].0 {
                            info[k] = (nd, s, Some(mv));
                            if cost == 0 {
                                queue.push_front(k);
                            } else {
                                queue.push_back(k);
                            }
                        }
                    }
                    None => {
                        if states.len() >= cap {
                            return Err(Error::CapExceeded { size: states.len() as u128, cap: cap as u128 });
                        }
                        let k = states.len();
                        index.insert(w.clone(), k);
                        states.push(w);
                        info.push((nd, s, Some(mv)));
                        done.push(false);
                        if cost == 0 {
                            queue.push_front(k);
                        } else {
                            queue.push_back(k);
                        }
                    }
                }
            }
        }
    }
    Err(Error::MovieGeneration("no rewrite by far commutations and braid relations".into()))
}
