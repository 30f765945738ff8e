//! Named graph families and their closed-form harmonic index and diameter.
//!
//! Vertex numbering is fixed per family so tests can refer to vertices:
//!
//! | family | numbering |
//! |---|---|
//! | `P(n)` | path `0-1-…-(n-1)` |
//! | `C(n)` | cycle `0-1-…-(n-1)-0` |
//! | `K(n)` | complete graph |
//! | `S(n)` | star `K_{1,n-1}`, centre `0` |
//! | `K4-` | hubs `0,1` (degree 3), nonadjacent `2,3` |
//! | `V(r,s)` | `K4-` as above; path of `r` new vertices hanging from `2`, then `s` from `3` |
//! | `U(n)` | cycle `0-1-2-3-0`; pendant `4` on `0`; path `5-…-(n-1)` hanging from `2` |
//! | `U641` | same graph as `U(6)` |
//! | `U531` | triangle `0-1-2`; pendants `3` on `0` and `4` on `1` |
//! | `K13+` | star centre `0`, leaves `1,2,3`; extra pendant `4` on `1` |
//!
//! "Attaching a path of length ℓ" adds ℓ new vertices and ℓ edges.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{input, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `U_{n,4}^{1,n-5}`: C4 with a pendant vertex and a pendant path of `n − 5`
    /// edges on two antipodal vertices. `n ≥ 6`.
    U(usize),
    /// `V_{r,s}`: `K4-` with pendant paths of `r` and `s` edges on its two nonadjacent vertices.
    V(usize, usize),
    /// `U_{6,4}^{1,1}`, the order-6 exception.
    U641,
    /// `U_{5,3}^{1,1}`: K3 with pendants on two of its vertices, the order-5 exception.
    U531,
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}`, given by its order `n`.
    Star(usize),
    /// K4 minus an edge.
    K4Minus,
    /// `K_{1,3}` with a pendant vertex attached to one leaf.
    K13Plus,
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::U(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => n,
            FamilySpec::V(r, s) => 4 + r + s,
            FamilySpec::U641 => 6,
            FamilySpec::U531 | FamilySpec::K13Plus => 5,
            FamilySpec::K4Minus => 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min = match self {
            FamilySpec::U(_) => 6,
            FamilySpec::Path(_) | FamilySpec::Complete(_) => 1,
            FamilySpec::Cycle(_) => 3,
            FamilySpec::Star(_) => 2,
            _ => 0,
        };
        let n = match self {
            FamilySpec::V(r, s) => r.checked_add(*s).and_then(|x| x.checked_add(4)),
            _ => Some(self.order()),
        };
        match n {
            Some(n) if n < min => Err(input(format!("{self} needs order at least {min}"))),
            Some(n) if n <= MAX_VERTICES => Ok(()),
            _ => Err(input(format!("{self} exceeds {MAX_VERTICES} vertices"))),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n + 1);
        match *self {
            FamilySpec::Path(n) => edges.extend((1..n).map(|v| (v - 1, v))),
            FamilySpec::Cycle(n) => {
                edges.extend((1..n).map(|v| (v - 1, v)));
                edges.push((0, n - 1));
            }
            FamilySpec::Complete(n) => {
                edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            FamilySpec::Star(n) => edges.extend((1..n).map(|v| (0, v))),
            FamilySpec::K4Minus => edges.extend(K4_MINUS),
            FamilySpec::V(r, s) => {
                edges.extend(K4_MINUS);
                let mut next = 4;
                for (anchor, len) in [(2, r), (3, s)] {
                    attach_path(&mut edges, anchor, len, &mut next);
                }
            }
            FamilySpec::U(_) | FamilySpec::U641 => {
                edges.extend([(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]);
                let mut next = 5;
                attach_path(&mut edges, 2, n - 5, &mut next);
            }
            FamilySpec::U531 => edges.extend([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
            FamilySpec::K13Plus => edges.extend([(0, 1), (0, 2), (0, 3), (1, 4)]),
        }
        Graph::from_edges(n, &edges)
    }

    /// Exact `(H, D)` from a formula, without building the graph.
    ///
    /// Supported for `U(n)` with `n ≥ 7`, every `V(r,s)`, and paths, cycles,
    /// stars and complete graphs with at least one edge.
    pub fn closed_form(&self) -> Result<(Rational, usize)> {
        self.validate()?;
        let half = |k: usize| Rational::new(k as i64, 2);
        match *self {
            FamilySpec::U(n) if n >= 7 => Ok((half(n) - Rational::new(1, 3), n - 2)),
            FamilySpec::U(_) => Err(Error::Unsupported(
                "closed form for U(n) needs n >= 7; U(6) is the exception U641".into(),
            )),
            FamilySpec::V(r, s) => {
                let (lo, hi) = (r.min(s), r.max(s));
                let d = r + s + 2;
                let h = match (lo, hi) {
                    (0, 0) => Rational::new(29, 15),
                    (0, 1) => Rational::new(23, 10),
                    (1, 1) => Rational::new(8, 3),
                    (0, _) => half(d) + Rational::new(13, 15),
                    (1, _) => half(d) + Rational::new(11, 15),
                    _ => half(d) + Rational::new(4, 5),
                };
                Ok((h, d))
            }
            FamilySpec::Path(1) | FamilySpec::Complete(1) => Err(Error::Domain(format!(
                "{self} has no edges, so H is undefined"
            ))),
            FamilySpec::Path(2) => Ok((Rational::from_integer(1), 1)),
            // two end edges at 2/3, the rest at 1/2
            FamilySpec::Path(n) => Ok((Rational::new(4, 3) + half(n - 3), n - 1)),
            FamilySpec::Cycle(n) => Ok((half(n), n / 2)),
            FamilySpec::Complete(n) => Ok((half(n), 1)),
            FamilySpec::Star(n) => Ok((
                Rational::new(2 * (n as i64 - 1), n as i64),
                if n == 2 { 1 } else { 2 },
            )),
            _ => Err(Error::Unsupported(format!("no closed form for {self}"))),
        }
    }

    /// Candidate specs of order `n` tried by the recogniser, most specific name first.
    pub(crate) fn candidates(n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        match n {
            4 => out.push(FamilySpec::K4Minus),
            5 => out.extend([FamilySpec::U531, FamilySpec::K13Plus]),
            6 => out.push(FamilySpec::U641),
            _ => {}
        }
        if n >= 4 {
            let extra = n - 4;
            out.extend((0..=extra / 2).map(|r| FamilySpec::V(r, extra - r)));
        }
        if n >= 7 {
            out.push(FamilySpec::U(n));
        }
        if n >= 3 {
            out.push(FamilySpec::Cycle(n));
        }
        out.push(FamilySpec::Path(n));
        if n >= 2 {
            out.push(FamilySpec::Star(n));
        }
        out.push(FamilySpec::Complete(n));
        out
    }
}

const K4_MINUS: [(usize, usize); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];

fn attach_path(edges: &mut Vec<(usize, usize)>, anchor: usize, len: usize, next: &mut usize) {
    let mut prev = anchor;
    for _ in 0..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::U(n) => write!(f, "U({n})"),
            FamilySpec::V(r, s) => write!(f, "V({r},{s})"),
            FamilySpec::U641 => f.write_str("U641"),
            FamilySpec::U531 => f.write_str("U531"),
            FamilySpec::Path(n) => write!(f, "P({n})"),
            FamilySpec::Cycle(n) => write!(f, "C({n})"),
            FamilySpec::Complete(n) => write!(f, "K({n})"),
            FamilySpec::Star(n) => write!(f, "S({n})"),
            FamilySpec::K4Minus => f.write_str("K4-"),
            FamilySpec::K13Plus => f.write_str("K13+"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `U(n)`, `V(r,s)`, `P(n)`, `C(n)`, `K(n)`, `S(n)`, `U641`, `U531`,
    /// `K4-` and `K13+`, case-insensitively and ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let bad = || input(format!("unrecognised family {s:?}"));
        let spec = match compact.as_str() {
            "U641" => FamilySpec::U641,
            "U531" => FamilySpec::U531,
            "K4-" => FamilySpec::K4Minus,
            "K13+" => FamilySpec::K13Plus,
            _ => {
                let (head, rest) = compact.split_once('(').ok_or_else(bad)?;
                let args = rest.strip_suffix(')').ok_or_else(bad)?;
                let nums = args
                    .split(',')
                    .map(|a| a.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                match (head, nums.as_slice()) {
                    ("U", &[n]) => FamilySpec::U(n),
                    ("V", &[r, s]) => FamilySpec::V(r, s),
                    ("P", &[n]) => FamilySpec::Path(n),
                    ("C", &[n]) => FamilySpec::Cycle(n),
                    ("K", &[n]) => FamilySpec::Complete(n),
                    ("S", &[n]) => FamilySpec::Star(n),
                    _ => return Err(bad()),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
