//! Named graph families with their canonical labelings.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Graph, GraphError};

/// A named family member. Text form: `path:n`, `cycle:n`, `complete:n`,
/// `kpartite:c1,c2,...`, `net`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `1 - 2 - ... - n`.
    Path(usize),
    /// `1 - 2 - ... - n - 1`.
    Cycle(usize),
    Complete(usize),
    /// Parts labeled contiguously in the given order.
    CompleteMultipartite(Vec<usize>),
    /// Triangle `1, 2, 3` with pendants `4, 5, 6` on `1, 2, 3`.
    Net,
}

pub fn make_family(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Path(n) => {
            if n == 0 {
                return Err(GraphError::InvalidFamily("path needs n >= 1"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidFamily("cycle needs n >= 3"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(GraphError::InvalidFamily("complete graph needs n >= 1"));
            }
            Graph::from_edges(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
        }
        Family::CompleteMultipartite(ref parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(GraphError::InvalidFamily(
                    "multipartite graph needs at least one part, each of size >= 1",
                ));
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(core::iter::repeat_n(p, size));
            }
            let mut g = Graph::new(n)?;
            for i in 1..=n {
                for j in i + 1..=n {
                    if part_of[i - 1] != part_of[j - 1] {
                        g.add_edge(i, j)?;
                    }
                }
            }
            Ok(g)
        }
        Family::Net => Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]),
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "net" {
            return Ok(Family::Net);
        }
        let (name, arg) = s
            .split_once(':')
            .ok_or(GraphError::InvalidFamily("expected `name:args` or `net`"))?;
        let size = || {
            arg.trim()
                .parse::<usize>()
                .map_err(|_| GraphError::InvalidFamily("size is not a nonnegative integer"))
        };
        let family = match name.trim() {
            "path" => Family::Path(size()?),
            "cycle" => Family::Cycle(size()?),
            "complete" => Family::Complete(size()?),
            "kpartite" => Family::CompleteMultipartite(
                arg.split(',')
                    .map(|c| c.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| GraphError::InvalidFamily("part sizes must be integers"))?,
            ),
            _ => return Err(GraphError::InvalidFamily("unknown family name")),
        };
        // surface size errors at parse time
        make_family(&family)?;
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteMultipartite(parts) => {
                write!(f, "kpartite:")?;
                for (i, c) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            Family::Net => write!(f, "net"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn families() {
        let tri = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(tri.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);

        let k112 = make_family(&Family::CompleteMultipartite(vec![1, 1, 2])).unwrap();
        assert_eq!(k112.n(), 4);
        assert_eq!(
            k112.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
        );

        let net = make_family(&Family::Net).unwrap();
        assert_eq!(net.n(), 6);
        assert_eq!(net.edge_count(), 6);
        assert!(net.has_edge(3, 6) && net.has_edge(2, 5) && net.has_edge(1, 4));

        let c4 = make_family(&Family::Cycle(4)).unwrap();
        assert_eq!(
            c4.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 4), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn invalid_sizes() {
        assert!(make_family(&Family::Path(0)).is_err());
        assert!(make_family(&Family::Cycle(2)).is_err());
        assert!(make_family(&Family::Complete(0)).is_err());
        assert!(make_family(&Family::CompleteMultipartite(vec![])).is_err());
        assert!(make_family(&Family::CompleteMultipartite(vec![2, 0])).is_err());
    }

    #[test]
    fn spec_strings() {
        for s in ["path:3", "cycle:5", "complete:4", "kpartite:1,1,2", "net"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!(
            "kpartite: 2, 3".parse::<Family>().unwrap(),
            Family::CompleteMultipartite(vec![2, 3])
        );
        assert!("path".parse::<Family>().is_err());
        assert!("star:4".parse::<Family>().is_err());
        assert!("cycle:2".parse::<Family>().is_err());
        assert!("kpartite:1,x".parse::<Family>().is_err());
    }
}
