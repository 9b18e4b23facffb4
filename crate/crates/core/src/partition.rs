//! Integer partitions and the node calculus of their Young diagrams.
//!
//! Diagrams use the English convention: rows and columns are numbered from 1
//! starting at the top-left cell.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// `(col - row) mod p`, taking the nonnegative remainder.
    pub fn residue(self, p: Prime) -> usize {
        let p = p.get() as i64;
        (self.col as i64 - self.row as i64).rem_euclid(p) as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

pub fn node_residue(node: Node, p: Prime) -> usize {
    node.residue(p)
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&x| x == 0) {
            return Err(Error::Parse {
                term: parts[pos].to_string(),
                reason: "parts must be positive".into(),
            });
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                term: w[1].to_string(),
                reason: format!(
                    "parts must be weakly decreasing, but {} follows {}",
                    w[1], w[0]
                ),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from weakly decreasing parts, dropping trailing zeros.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`th part, 1-indexed, with zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// Distinct part values paired with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// The conjugate partition: column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        let mut cols = vec![0; width];
        for &x in &self.parts {
            for c in cols.iter_mut().take(x) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Nodes `(i, λ_i)` whose removal leaves a partition, by increasing row.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let t = self.len();
        (1..=t)
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i, self.part(i)))
            .collect()
    }

    /// Nodes that can be added while keeping a partition, by increasing row.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let t = self.len();
        (1..=t + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Node::new(i, self.part(i) + 1))
            .collect()
    }

    pub fn is_removable(&self, node: Node) -> bool {
        node.row >= 1
            && node.row <= self.len()
            && node.col == self.part(node.row)
            && self.part(node.row + 1) < node.col
    }

    pub fn remove_node(&self, node: Node) -> Result<Partition> {
        if !self.is_removable(node) {
            return Err(Error::NotRemovable {
                node,
                partition: self.clone(),
            });
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        Ok(Partition::from_sorted(parts))
    }

    pub fn add_node(&self, node: Node) -> Result<Partition> {
        let ok = node.row >= 1
            && node.row <= self.len() + 1
            && node.col == self.part(node.row) + 1
            && (node.row == 1 || self.part(node.row - 1) >= node.col);
        if !ok {
            return Err(Error::NotAddable {
                node,
                partition: self.clone(),
            });
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Renders as `(4,4,2,1)`, or `∅` for the empty partition.
    pub fn to_tuple_string(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        format!("({})", body.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// Canonical rendering: exponent notation, parts decreasing, e.g.
/// `20^10,10^5,5^5`. The empty partition renders as `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for (k, (value, mult)) in self.multiplicities().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if mult == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{mult}")?;
            }
        }
        Ok(())
    }
}

fn parse_positive(term: &str, text: &str, what: &str) -> Result<usize> {
    match text.trim().parse::<usize>() {
        Ok(0) => Err(Error::Parse {
            term: term.to_string(),
            reason: format!("{what} must be positive"),
        }),
        Ok(n) => Ok(n),
        Err(_) => Err(Error::Parse {
            term: term.to_string(),
            reason: format!("{what} is not a positive integer"),
        }),
    }
}

/// Parses comma-separated terms `n` or `n^m` (`m` copies of `n`). The empty
/// string and `∅` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for raw in text.split(',') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse {
                    term: raw.to_string(),
                    reason: "empty term".into(),
                });
            }
            let (value, mult) = match term.split_once('^') {
                Some((v, m)) => (
                    parse_positive(term, v, "part")?,
                    parse_positive(term, m, "exponent")?,
                ),
                None => (parse_positive(term, term, "part")?, 1),
            };
            if let Some(&prev) = parts.last() {
                if value > prev {
                    return Err(Error::Parse {
                        term: term.to_string(),
                        reason: format!(
                            "parts must be weakly decreasing, but {value} follows {prev}"
                        ),
                    });
                }
            }
            parts.extend(std::iter::repeat_n(value, mult));
        }
        Ok(Partition { parts })
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

/// Iterator over the partitions of `d` in reverse-lexicographic order,
/// starting at `(d)` and ending at `(1^d)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let k = parts.iter().rposition(|&x| x > 1)?;
    let ones = parts.len() - k - 1;
    let m = parts[k] - 1;
    let mut rest = ones + 1;
    let mut out = parts[..k].to_vec();
    out.push(m);
    while rest >= m {
        out.push(m);
        rest -= m;
    }
    if rest > 0 {
        out.push(rest);
    }
    Some(out)
}

/// All partitions of `d`, each exactly once, in reverse-lexicographic order.
pub fn partitions_of(d: usize) -> Partitions {
    let first = if d == 0 { Vec::new() } else { vec![d] };
    Partitions { next: Some(first) }
}
