//! Harmonic index, the diameter bounds it is compared against, and the
//! vertex-deletion identities used to reason about those bounds inductively.
//!
//! Every quantity is an exact [`Rational`]. A bound check never rounds, so an
//! equality case is reported as [`Status::Equal`] only on an exact tie.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// `H(G) = Σ_{uv ∈ E} 2 / (d_u + d_v)`.
///
/// Edgeless graphs are rejected rather than given the empty sum.
pub fn harmonic_index(g: &Graph) -> Result<Rational> {
    if g.edge_count() == 0 {
        return Err(domain("harmonic index is undefined for an edgeless graph"));
    }
    Ok(g.edges()
        .map(|(u, v)| edge_weight(g.deg(u), g.deg(v)))
        .sum())
}

fn edge_weight(du: usize, dv: usize) -> Rational {
    Rational::new(2, (du + dv) as i64)
}

/// Whether a bound is a lower or an upper bound on `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

/// The catalogue of diameter bounds on the harmonic index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    /// Quasi-trees: `H ≥ D + 5/3 − n/2`.
    QtAdditive,
    /// Quasi-trees: `H ≥ (1/2 + 2/(3(n−2)))·D`.
    QtMultiplicative,
    /// Connected graphs (conjectured): `H ≥ D + 5/6 − n/2`.
    Conj1Additive,
    /// Connected graphs (conjectured): `H ≥ (1/2 + 1/(3(n−1)))·D`.
    Conj1Multiplicative,
    /// Trees of order ≥ 4: `H ≥ D + 5/6 − n/2`.
    TreeAdditive,
    /// Trees of order ≥ 4: `H ≥ (1/2 + 1/(3(n−1)))·D`.
    TreeMultiplicative,
    /// Connected graphs of order ≥ 4: `H ≤ D + n/2 − 1`.
    UpperAdditive,
    /// Connected graphs of order ≥ 4: `H ≤ (n/2)·D`.
    UpperMultiplicative,
}

impl BoundId {
    pub const ALL: [BoundId; 8] = [
        BoundId::QtAdditive,
        BoundId::QtMultiplicative,
        BoundId::Conj1Additive,
        BoundId::Conj1Multiplicative,
        BoundId::TreeAdditive,
        BoundId::TreeMultiplicative,
        BoundId::UpperAdditive,
        BoundId::UpperMultiplicative,
    ];
    pub const QUASI_TREE: [BoundId; 2] = [BoundId::QtAdditive, BoundId::QtMultiplicative];
    pub const CONJECTURE_1: [BoundId; 2] = [BoundId::Conj1Additive, BoundId::Conj1Multiplicative];
    pub const TREE: [BoundId; 2] = [BoundId::TreeAdditive, BoundId::TreeMultiplicative];
    pub const UPPER: [BoundId; 2] = [BoundId::UpperAdditive, BoundId::UpperMultiplicative];

    pub fn direction(self) -> Direction {
        match self {
            BoundId::UpperAdditive | BoundId::UpperMultiplicative => Direction::Upper,
            _ => Direction::Lower,
        }
    }

    /// Smallest order for which the formula is defined.
    pub fn min_order(self) -> usize {
        match self {
            BoundId::QtAdditive | BoundId::QtMultiplicative => 3,
            BoundId::Conj1Multiplicative | BoundId::TreeMultiplicative => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundId::QtAdditive => "QT_ADDITIVE",
            BoundId::QtMultiplicative => "QT_MULTIPLICATIVE",
            BoundId::Conj1Additive => "CONJ1_ADDITIVE",
            BoundId::Conj1Multiplicative => "CONJ1_MULTIPLICATIVE",
            BoundId::TreeAdditive => "TREE_ADDITIVE",
            BoundId::TreeMultiplicative => "TREE_MULTIPLICATIVE",
            BoundId::UpperAdditive => "UPPER_ADDITIVE",
            BoundId::UpperMultiplicative => "UPPER_MULTIPLICATIVE",
        }
    }

    /// Human-readable formula.
    pub fn formula(self) -> &'static str {
        match self {
            BoundId::QtAdditive => "H >= D + 5/3 - n/2",
            BoundId::QtMultiplicative => "H >= (1/2 + 2/(3(n-2))) D",
            BoundId::Conj1Additive | BoundId::TreeAdditive => "H >= D + 5/6 - n/2",
            BoundId::Conj1Multiplicative | BoundId::TreeMultiplicative => {
                "H >= (1/2 + 1/(3(n-1))) D"
            }
            BoundId::UpperAdditive => "H <= D + n/2 - 1",
            BoundId::UpperMultiplicative => "H <= (n/2) D",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == wanted)
            .ok_or_else(|| input(format!("unknown bound {s:?}")))
    }
}

/// Value of bound `id` for a graph of order `n` and diameter `d`.
pub fn bound_value(id: BoundId, n: usize, d: usize) -> Result<Rational> {
    if n < id.min_order() {
        return Err(domain(format!(
            "{id} needs n >= {}, got n = {n}",
            id.min_order()
        )));
    }
    if d < 1 {
        return Err(domain(format!("{id} needs D >= 1")));
    }
    let n_i = n as i64;
    let half_n = Rational::new(n_i, 2);
    let dr = Rational::from_integer(d as i64);
    let half = Rational::new(1, 2);
    Ok(match id {
        BoundId::QtAdditive => dr + Rational::new(5, 3) - half_n,
        BoundId::QtMultiplicative => (half + Rational::new(2, 3 * (n_i - 2))) * dr,
        BoundId::Conj1Additive | BoundId::TreeAdditive => dr + Rational::new(5, 6) - half_n,
        BoundId::Conj1Multiplicative | BoundId::TreeMultiplicative => {
            (half + Rational::new(1, 3 * (n_i - 1))) * dr
        }
        BoundId::UpperAdditive => dr + half_n - Rational::from_integer(1),
        BoundId::UpperMultiplicative => half_n * dr,
    })
}

/// Outcome of comparing `H` against one bound.
///
/// `Strict` means the bound holds with slack; `Violated` means `H` lies on the
/// wrong side. The sense of "wrong side" follows [`BoundId::direction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Strict,
    Equal,
    Violated,
}

impl Status {
    fn classify(direction: Direction, h: &Rational, bound: &Rational) -> Status {
        use std::cmp::Ordering::*;
        match (direction, h.cmp(bound)) {
            (_, Equal) => Status::Equal,
            (Direction::Lower, Greater) | (Direction::Upper, Less) => Status::Strict,
            _ => Status::Violated,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Strict => "STRICT",
            Status::Equal => "EQUAL",
            Status::Violated => "VIOLATED",
        })
    }
}

/// One bound's value and status within a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: BoundId,
    pub value: Rational,
    pub status: Status,
}

impl BoundCheck {
    /// Distance from `H` to the bound, positive on the satisfied side.
    pub fn slack(&self, h: &Rational) -> Rational {
        match self.bound.direction() {
            Direction::Lower => h - &self.value,
            Direction::Upper => &self.value - h,
        }
    }
}

/// Every requested bound evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub n: usize,
    pub diameter: usize,
    pub harmonic: Rational,
    pub checks: Vec<BoundCheck>,
}

impl Verdict {
    pub fn check(&self, id: BoundId) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.bound == id)
    }

    pub fn status(&self, id: BoundId) -> Option<Status> {
        self.check(id).map(|c| c.status)
    }

    pub fn any(&self, status: Status) -> bool {
        self.checks.iter().any(|c| c.status == status)
    }
}

/// Evaluates the bounds `ids` (in the given order, duplicates dropped) on a connected graph.
pub fn evaluate(g: &Graph, ids: &[BoundId]) -> Result<Verdict> {
    let diameter = g.diameter()?;
    let harmonic = harmonic_index(g)?;
    let n = g.order();
    let mut checks: Vec<BoundCheck> = Vec::with_capacity(ids.len());
    for &id in ids {
        if checks.iter().any(|c| c.bound == id) {
            continue;
        }
        let value = bound_value(id, n, diameter)?;
        let status = Status::classify(id.direction(), &harmonic, &value);
        checks.push(BoundCheck {
            bound: id,
            value,
            status,
        });
    }
    Ok(Verdict {
        n,
        diameter,
        harmonic,
        checks,
    })
}

/// Which deletion identity produced a [`DeletionDelta`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeletionCase {
    /// `t` is a pendant vertex.
    Pendant,
    /// `t` has degree two and its neighbours are not adjacent.
    Degree2Nonadjacent,
    /// `t` has degree two and its neighbours are adjacent.
    Degree2Adjacent,
}

/// `H(G) − H(G − t)` computed from degrees in `G` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionDelta {
    pub case: DeletionCase,
    pub value: Rational,
}

/// `Σ_{x ∈ N(r) \ skip} 2 / ((d_r + d_x − 1)(d_r + d_x))`: the drop in the
/// weights of `r`'s remaining edges when `r` loses one neighbour.
fn neighbour_loss(g: &Graph, r: usize, skip: &[usize]) -> Rational {
    let dr = g.deg(r);
    g.neighbors(r)
        .filter(|x| !skip.contains(x))
        .map(|x| {
            let s = (dr + g.deg(x)) as i64;
            Rational::new(2, (s - 1) * s)
        })
        .sum()
}

/// Identity for deleting a pendant vertex `t` with neighbour `r`:
///
/// `H(G) − H(G − t) = 2/(d_r + 1) − Σ_{x ∈ N(r), x ≠ t} 2/((d_r + d_x − 1)(d_r + d_x))`.
pub fn pendant_deletion_delta(g: &Graph, t: usize) -> Result<DeletionDelta> {
    if g.degree(t)? != 1 {
        return Err(input(format!("vertex {t} is not pendant")));
    }
    let r = g.neighbors(t).next().expect("degree one");
    let dr = g.deg(r) as i64;
    let value = Rational::new(2, dr + 1) - neighbour_loss(g, r, &[t]);
    Ok(DeletionDelta {
        case: DeletionCase::Pendant,
        value,
    })
}

/// Identity for deleting a degree-2 vertex `t` with neighbours `r`, `s`.
///
/// With `r`, `s` nonadjacent:
/// `2/(2+d_r) + 2/(2+d_s) − Σ_{x∈N(r)∖t} 2/((d_r+d_x−1)(d_r+d_x)) − Σ_{y∈N(s)∖t} 2/((d_s+d_y−1)(d_s+d_y))`.
///
/// With `r ~ s`, the edge `rs` loses two degree units at once, so it
/// contributes `2/(d_r+d_s) − 2/(d_r+d_s−2)` and is left out of both sums.
/// Here `d_r, d_s ≥ 2` always holds, so `d_r + d_s − 2` is never zero.
pub fn degree2_deletion_delta(g: &Graph, t: usize) -> Result<DeletionDelta> {
    if g.degree(t)? != 2 {
        return Err(input(format!("vertex {t} does not have degree 2")));
    }
    if !g.delete_vertex(t)?.is_connected() {
        return Err(input(format!("deleting vertex {t} disconnects the graph")));
    }
    let mut nb = g.neighbors(t);
    let (r, s) = (nb.next().unwrap(), nb.next().unwrap());
    let (dr, ds) = (g.deg(r) as i64, g.deg(s) as i64);
    let base = Rational::new(2, dr + 2) + Rational::new(2, ds + 2);
    if g.has_edge(r, s) {
        let value = base + Rational::new(2, dr + ds)
            - Rational::new(2, dr + ds - 2)
            - neighbour_loss(g, r, &[t, s])
            - neighbour_loss(g, s, &[t, r]);
        Ok(DeletionDelta {
            case: DeletionCase::Degree2Adjacent,
            value,
        })
    } else {
        let value = base - neighbour_loss(g, r, &[t]) - neighbour_loss(g, s, &[t]);
        Ok(DeletionDelta {
            case: DeletionCase::Degree2Nonadjacent,
            value,
        })
    }
}
