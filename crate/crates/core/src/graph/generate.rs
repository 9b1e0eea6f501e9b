use std::fmt;
use std::str::FromStr;

use super::{rooted_sum, Graph, GraphError, RootedGraph};

/// Largest `n` accepted by `s:n`; `S_n` has `2^(n-1)` vertices.
pub const MAX_S_INDEX: usize = 12;

/// Generator descriptor, written `family:args` on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    /// `path:n`, vertices `p1..pn`.
    Path(usize),
    /// `cycle:n`, vertices `v1..vn`.
    Cycle(usize),
    /// `complete:n`, vertices `v1..vn`.
    Complete(usize),
    /// `spider:l1,...,lk`: root `r`, leg `i` is `x{i}.1 .. x{i}.{li}`.
    Spider(Vec<usize>),
    /// `tomega:n`, the spider with legs `1, 2, ..., n`.
    TOmega(usize),
    /// `s:n`, the rooted tree `S_n`.
    S(usize),
    /// `polat:n[:t]`, the Polat graph restricted to `x0..x{n-1}`, with an optional tail
    /// `z1..zt` hanging off `z`.
    Polat { n: usize, tail: usize },
}

impl GenSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let g = match *self {
            GenSpec::Path(n) => path(n),
            GenSpec::Cycle(n) => cycle(n),
            GenSpec::Complete(n) => complete(n),
            GenSpec::Spider(ref legs) => spider(legs),
            GenSpec::TOmega(n) => spider(&(1..=n).collect::<Vec<_>>()),
            GenSpec::S(n) => s_tree(n).graph,
            GenSpec::Polat { n, tail } => polat(n, tail),
        };
        Ok(g)
    }

    /// Like [`build`](Self::build), but keeps the distinguished root where the family has one.
    pub fn build_rooted(&self) -> Result<RootedGraph, GraphError> {
        self.validate()?;
        match *self {
            GenSpec::S(n) => Ok(s_tree(n)),
            GenSpec::Spider(_) | GenSpec::TOmega(_) => RootedGraph::new(self.build()?, "r"),
            _ => Err(self.bad("family has no root")),
        }
    }

    fn bad(&self, msg: &str) -> GraphError {
        GraphError::BadSpec {
            spec: self.to_string(),
            msg: msg.to_string(),
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        let ok = match self {
            GenSpec::Path(n) | GenSpec::Complete(n) => *n >= 1,
            GenSpec::Cycle(n) => *n >= 3,
            GenSpec::Spider(legs) => !legs.is_empty() && legs.iter().all(|&l| l >= 1),
            GenSpec::TOmega(n) => *n >= 1,
            GenSpec::S(n) => {
                if *n > MAX_S_INDEX {
                    return Err(self.bad(&format!("index above size guard {MAX_S_INDEX}")));
                }
                *n >= 1
            }
            GenSpec::Polat { n, tail: _ } => *n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(self.bad("parameter out of range"))
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Path(n) => write!(f, "path:{n}"),
            GenSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GenSpec::Complete(n) => write!(f, "complete:{n}"),
            GenSpec::Spider(legs) => {
                let legs: Vec<String> = legs.iter().map(usize::to_string).collect();
                write!(f, "spider:{}", legs.join(","))
            }
            GenSpec::TOmega(n) => write!(f, "tomega:{n}"),
            GenSpec::S(n) => write!(f, "s:{n}"),
            GenSpec::Polat { n, tail: 0 } => write!(f, "polat:{n}"),
            GenSpec::Polat { n, tail } => write!(f, "polat:{n}:{tail}"),
        }
    }
}

impl FromStr for GenSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| GraphError::BadSpec {
            spec: s.to_string(),
            msg: msg.to_string(),
        };
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad("expected a number"))
        };
        let mut parts = s.trim().split(':');
        let family = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let one = || match args.as_slice() {
            [a] => num(a),
            _ => Err(bad("expected exactly one argument")),
        };
        let spec = match family {
            "path" => GenSpec::Path(one()?),
            "cycle" => GenSpec::Cycle(one()?),
            "complete" => GenSpec::Complete(one()?),
            "tomega" => GenSpec::TOmega(one()?),
            "s" => GenSpec::S(one()?),
            "spider" => match args.as_slice() {
                [legs] => GenSpec::Spider(legs.split(',').map(num).collect::<Result<_, _>>()?),
                _ => return Err(bad("expected spider:l1,l2,...")),
            },
            "polat" => match args.as_slice() {
                [n] => GenSpec::Polat {
                    n: num(n)?,
                    tail: 0,
                },
                [n, t] => {
                    let tail = num(t)?;
                    if tail == 0 {
                        return Err(bad("tail length must be at least 1"));
                    }
                    GenSpec::Polat { n: num(n)?, tail }
                }
                _ => return Err(bad("expected polat:n or polat:n:t")),
            },
            _ => return Err(bad("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path(n: usize) -> Graph {
    let mut g = Graph::new();
    g.add_vertex("p1").unwrap();
    for k in 2..=n {
        g.add_edge(&format!("p{}", k - 1), &format!("p{k}"))
            .unwrap();
    }
    g
}

fn cycle(n: usize) -> Graph {
    let mut g = Graph::new();
    for k in 1..=n {
        g.add_vertex(&format!("v{k}")).unwrap();
    }
    for k in 1..=n {
        g.add_edge(&format!("v{k}"), &format!("v{}", k % n + 1))
            .unwrap();
    }
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for k in 1..=n {
        g.add_vertex(&format!("v{k}")).unwrap();
    }
    for a in 1..=n {
        for b in a + 1..=n {
            g.add_edge(&format!("v{a}"), &format!("v{b}")).unwrap();
        }
    }
    g
}

fn spider(legs: &[usize]) -> Graph {
    let mut g = Graph::new();
    g.add_vertex("r").unwrap();
    for (i, &len) in legs.iter().enumerate() {
        let mut prev = "r".to_string();
        for j in 1..=len {
            let cur = format!("x{}.{}", i + 1, j);
            g.add_edge(&prev, &cur).unwrap();
            prev = cur;
        }
    }
    g
}

fn s_tree(n: usize) -> RootedGraph {
    let mut family = vec![RootedGraph::singleton("r").unwrap()];
    for _ in 2..=n {
        let next = rooted_sum(&family, "r").expect("prefixed labels are disjoint");
        family.push(next);
    }
    family.pop().unwrap()
}

fn polat(n: usize, tail: usize) -> Graph {
    let mut g = Graph::new();
    for m in 0..n {
        g.add_vertex(&format!("x{m}")).unwrap();
    }
    for m in 0..n + 3 {
        g.add_vertex(&format!("y{m}")).unwrap();
    }
    g.add_vertex("z").unwrap();
    for m in 0..n {
        let x = format!("x{m}");
        if m + 1 < n {
            g.add_edge(&x, &format!("x{}", m + 1)).unwrap();
        }
        g.add_edge(&x, "z").unwrap();
        for k in m..=m + 3 {
            g.add_edge(&x, &format!("y{k}")).unwrap();
        }
    }
    let mut prev = "z".to_string();
    for k in 1..=tail {
        let cur = format!("z{k}");
        g.add_edge(&prev, &cur).unwrap();
        prev = cur;
    }
    g
}
