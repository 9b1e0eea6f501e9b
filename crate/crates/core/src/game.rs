//! Turn-by-turn play: strategies read off a [`CaptureTable`], simulation, and an independent
//! backward-induction solver over the explicit game graph.
//!
//! A round is one robber half-move followed by one cop half-move; the robber moves first.
//! Capture is checked after every half-move. The initial placement is round 0, and the round
//! counter advances when the cop's half-move completes. A robber that steps onto the cop is
//! captured in the round in progress.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::capture::{CaptureTable, CaptureValue};
use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("capture table was computed for a different graph")]
    TableMismatch,
    #[error("max_rounds must be positive")]
    ZeroRounds,
    #[error("max_value {given} is below the bound n(n-1) = {needed}")]
    MaxValueTooSmall { given: u32, needed: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Robber,
    Cop,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Robber => "robber",
            Player::Cop => "cop",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cop: VertexId,
    pub robber: VertexId,
    pub to_move: Player,
    pub round: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfMove {
    pub round: u32,
    pub mover: Player,
    pub from: VertexId,
    pub to: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Captured { round: u32 },
    Survived { rounds: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub initial: GameState,
    pub moves: Vec<HalfMove>,
    pub outcome: Outcome,
}

impl Trace {
    /// One half-move per line, then the outcome.
    pub fn render(&self, g: &Graph) -> String {
        let mut out = format!(
            "start: robber {} cop {}\n",
            g.label(self.initial.robber),
            g.label(self.initial.cop)
        );
        for m in &self.moves {
            out.push_str(&format!(
                "round {}: {} {} -> {}\n",
                m.round,
                m.mover,
                g.label(m.from),
                g.label(m.to)
            ));
        }
        match self.outcome {
            Outcome::Captured { round } => out.push_str(&format!("captured at round {round}\n")),
            Outcome::Survived { rounds } => out.push_str(&format!("survived {rounds} rounds\n")),
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RobberPolicy {
    Optimal,
    /// Uniform over `N[robber]`, from a seeded generator.
    Random(u64),
}

/// The cop's reply with the robber on `robber`: a vertex of `N[cop]` minimizing the capture
/// value, earliest-inserted on ties.
pub fn cop_strategy(t: &CaptureTable, robber: VertexId, cop: VertexId) -> VertexId {
    let g = t.graph();
    if robber == cop {
        return cop;
    }
    g.closed_neighborhood(cop)
        .into_iter()
        .min_by_key(|&y| (t.eta(robber, y), y))
        .unwrap()
}

pub fn cop_strategy_by_label<'a>(
    t: &'a CaptureTable,
    robber: &str,
    cop: &str,
) -> Result<&'a str, GameError> {
    let g = t.graph();
    let (u, v) = (g.require(robber)?, g.require(cop)?);
    Ok(g.label(cop_strategy(t, u, v)))
}

/// What the robber can guarantee after moving to `x` against a cop on `cop`.
fn reply_value(t: &CaptureTable, x: VertexId, cop: VertexId) -> CaptureValue {
    t.graph()
        .closed_neighborhood(cop)
        .into_iter()
        .map(|y| t.eta(x, y))
        .min()
        .unwrap()
}

/// The robber's move: a vertex of `N[robber]` maximizing the value of the cop's best reply,
/// earliest-inserted on ties.
pub fn robber_strategy(t: &CaptureTable, robber: VertexId, cop: VertexId) -> VertexId {
    let mut best = robber;
    let mut best_val = None;
    for x in t.graph().closed_neighborhood(robber) {
        let val = reply_value(t, x, cop);
        if best_val.is_none_or(|b| val > b) {
            best = x;
            best_val = Some(val);
        }
    }
    best
}

pub fn robber_strategy_by_label<'a>(
    t: &'a CaptureTable,
    robber: &str,
    cop: &str,
) -> Result<&'a str, GameError> {
    let g = t.graph();
    let (u, v) = (g.require(robber)?, g.require(cop)?);
    Ok(g.label(robber_strategy(t, u, v)))
}

/// Plays the cop's optimal strategy against `policy` for at most `max_rounds` rounds.
pub fn simulate(
    g: &Graph,
    t: &CaptureTable,
    robber0: VertexId,
    cop0: VertexId,
    max_rounds: u32,
    policy: RobberPolicy,
) -> Result<Trace, GameError> {
    if t.graph() != g {
        return Err(GameError::TableMismatch);
    }
    if max_rounds == 0 {
        return Err(GameError::ZeroRounds);
    }
    let n = g.vertex_count();
    if robber0.0 >= n || cop0.0 >= n {
        return Err(GraphError::UnknownVertex(format!("{}", robber0.max(cop0))).into());
    }
    let initial = GameState {
        cop: cop0,
        robber: robber0,
        to_move: Player::Robber,
        round: 0,
    };
    let mut rng = match policy {
        RobberPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        RobberPolicy::Optimal => None,
    };
    let mut moves = Vec::new();
    let (mut robber, mut cop) = (robber0, cop0);
    if robber == cop {
        return Ok(Trace {
            initial,
            moves,
            outcome: Outcome::Captured { round: 0 },
        });
    }
    for round in 1..=max_rounds {
        let to = match rng.as_mut() {
            Some(rng) => *g.closed_neighborhood(robber).choose(rng).unwrap(),
            None => robber_strategy(t, robber, cop),
        };
        moves.push(HalfMove {
            round,
            mover: Player::Robber,
            from: robber,
            to,
        });
        robber = to;
        if robber == cop {
            return Ok(Trace {
                initial,
                moves,
                outcome: Outcome::Captured { round },
            });
        }
        let to = cop_strategy(t, robber, cop);
        moves.push(HalfMove {
            round,
            mover: Player::Cop,
            from: cop,
            to,
        });
        cop = to;
        if robber == cop {
            return Ok(Trace {
                initial,
                moves,
                outcome: Outcome::Captured { round },
            });
        }
    }
    Ok(Trace {
        initial,
        moves,
        outcome: Outcome::Survived { rounds: max_rounds },
    })
}

/// `n(n-1) + 1`, enough headroom for any finite capture value.
pub fn default_max_value(g: &Graph) -> u32 {
    let n = g.vertex_count() as u32;
    n * n.saturating_sub(1) + 1
}

/// Game values by backward induction on the explicit state space.
///
/// States are `(robber, cop)` with the robber to move and `(robber, cop)` with the cop to
/// move. All non-terminal values start at infinity and are lowered by Bellman sweeps until
/// nothing changes. Values above `max_value` are reported as `Never`. The result is indexed
/// `[robber][cop]` for robber-to-move states.
pub fn brute_force_table(g: &Graph, max_value: u32) -> Result<Vec<Vec<CaptureValue>>, GameError> {
    if g.is_empty() {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let n = g.vertex_count();
    let needed = (n * (n - 1)) as u32;
    if max_value < needed {
        return Err(GameError::MaxValueTooSmall {
            given: max_value,
            needed,
        });
    }
    const INF: u32 = u32::MAX;
    let cap = |v: u32| if v > max_value { INF } else { v };
    let moves: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut m: Vec<usize> = g.neighbors(VertexId(v)).iter().map(|w| w.0).collect();
            m.push(v);
            m
        })
        .collect();

    // robber_turn[r][c]: robber on r to move, cop on c
    // cop_turn[r][c]: robber just moved to r, cop on c to move, round in progress
    let mut robber_turn = vec![vec![INF; n]; n];
    let mut cop_turn = vec![vec![INF; n]; n];
    for (v, row) in robber_turn.iter_mut().enumerate() {
        row[v] = 0;
    }
    loop {
        let mut changed = false;
        for r in 0..n {
            for c in 0..n {
                if r == c {
                    continue;
                }
                let best = moves[c]
                    .iter()
                    .map(|&y| {
                        if y == r {
                            1
                        } else {
                            robber_turn[r][y].saturating_add(1)
                        }
                    })
                    .min()
                    .unwrap();
                let best = cap(best);
                if best < cop_turn[r][c] {
                    cop_turn[r][c] = best;
                    changed = true;
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                if r == c {
                    continue;
                }
                let worst = moves[r]
                    .iter()
                    .map(|&x| if x == c { 1 } else { cop_turn[x][c] })
                    .max()
                    .unwrap();
                if worst < robber_turn[r][c] {
                    robber_turn[r][c] = worst;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(robber_turn
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    if v == INF {
                        CaptureValue::Never
                    } else {
                        CaptureValue::Finite(v)
                    }
                })
                .collect()
        })
        .collect())
}
