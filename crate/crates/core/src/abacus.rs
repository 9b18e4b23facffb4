//! Beta-numbers and the p-runner abacus.
//!
//! Position `l` sits on runner `l mod p` in row `l / p + 1`. Every display
//! carries a positive multiple of `p` beads, so a removable bead on runner `i`
//! always corresponds to a removable node of residue `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};
use crate::prime::Prime;

/// Strictly decreasing nonnegative integers; the bead count `r` is the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BetaSequence {
    values: Vec<usize>,
}

impl BetaSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBeta(format!(
                "{values:?} is not strictly decreasing"
            )));
        }
        Ok(BetaSequence { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn beads(&self) -> usize {
        self.values.len()
    }
}

/// `β_i = λ_i - i + r` for `1 ≤ i ≤ r`.
pub fn beta_numbers(lam: &Partition, r: usize) -> Result<BetaSequence> {
    if r < lam.len() {
        return Err(Error::BeadCount {
            beads: r,
            p: 0,
            parts: lam.len(),
            reason: "fewer beads than parts",
        });
    }
    let values = (1..=r).map(|i| lam.part(i) + r - i).collect();
    Ok(BetaSequence { values })
}

/// Beta-numbers with exactly one bead per part: the hook lengths of the cells
/// in the first column.
pub fn first_column_hook_lengths(lam: &Partition) -> BetaSequence {
    beta_numbers(lam, lam.len()).expect("r equals the number of parts")
}

pub fn partition_from_beta(beta: &BetaSequence) -> Partition {
    let r = beta.beads();
    let parts = beta
        .values
        .iter()
        .enumerate()
        .map(|(k, &b)| b + k + 1 - r)
        .collect();
    Partition::from_sorted(parts)
}

/// How many beads to place on the abacus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BeadCount {
    /// The smallest multiple of `p` that is at least `max(#parts, 1)`.
    #[default]
    Auto,
    Exact(usize),
}

impl FromStr for BeadCount {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(BeadCount::Auto);
        }
        s.parse::<usize>()
            .map(BeadCount::Exact)
            .map_err(|_| format!("expected `auto` or a bead count, got `{s}`"))
    }
}

impl fmt::Display for BeadCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BeadCount::Auto => f.write_str("auto"),
            BeadCount::Exact(r) => write!(f, "{r}"),
        }
    }
}

pub fn canonical_bead_count(lam: &Partition, p: Prime) -> usize {
    let p = p.get();
    lam.len().max(1).div_ceil(p) * p
}

/// Bead positions on `p` runners. Positions are kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDisplay")]
pub struct AbacusDisplay {
    p: Prime,
    r: usize,
    occupied: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDisplay {
    p: usize,
    r: usize,
    occupied: Vec<usize>,
}

impl TryFrom<RawDisplay> for AbacusDisplay {
    type Error = Error;

    fn try_from(raw: RawDisplay) -> Result<Self> {
        let p = Prime::new(raw.p)?;
        let disp = AbacusDisplay::from_positions(p, raw.occupied)?;
        if disp.r != raw.r {
            return Err(Error::InvalidDisplay(format!(
                "r = {} but {} positions are occupied",
                raw.r, disp.r
            )));
        }
        Ok(disp)
    }
}

/// A bead that can slide one position to the left, with the node it
/// corresponds to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovableBead {
    pub position: usize,
    pub node: Node,
    pub residue: usize,
}

impl AbacusDisplay {
    pub fn new(lam: &Partition, p: Prime, beads: BeadCount) -> Result<Self> {
        let r = match beads {
            BeadCount::Auto => canonical_bead_count(lam, p),
            BeadCount::Exact(r) => {
                let reason = if r == 0 || r % p.get() != 0 {
                    Some("bead count must be a positive multiple of p")
                } else if r < lam.len() {
                    Some("fewer beads than parts")
                } else {
                    None
                };
                if let Some(reason) = reason {
                    return Err(Error::BeadCount {
                        beads: r,
                        p: p.get(),
                        parts: lam.len(),
                        reason,
                    });
                }
                r
            }
        };
        let mut occupied = beta_numbers(lam, r)?.values;
        occupied.reverse();
        Ok(AbacusDisplay { p, r, occupied })
    }

    /// A display from explicit bead positions.
    pub fn from_positions<I>(p: Prime, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut occupied: Vec<usize> = positions.into_iter().collect();
        occupied.sort_unstable();
        if occupied.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDisplay("repeated bead position".into()));
        }
        let r = occupied.len();
        if r == 0 || !r.is_multiple_of(p.get()) {
            return Err(Error::InvalidDisplay(format!(
                "{r} beads is not a positive multiple of {p}"
            )));
        }
        Ok(AbacusDisplay { p, r, occupied })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    /// The bead count `r`.
    pub fn beads(&self) -> usize {
        self.r
    }

    /// Occupied positions, ascending.
    pub fn occupied(&self) -> &[usize] {
        &self.occupied
    }

    pub fn is_occupied(&self, position: usize) -> bool {
        self.occupied.binary_search(&position).is_ok()
    }

    /// Number of rows needed to show every bead.
    pub fn rows(&self) -> usize {
        self.occupied.last().map_or(0, |&l| l / self.p.get() + 1)
    }

    /// Rows (1-indexed, ascending) holding a bead on `runner`.
    pub fn runner_rows(&self, runner: usize) -> Vec<usize> {
        let p = self.p.get();
        self.occupied
            .iter()
            .filter(|&&l| l % p == runner)
            .map(|&l| l / p + 1)
            .collect()
    }

    /// Bead count on each runner, `λ^[0], …, λ^[p-1]`.
    pub fn runner_counts(&self) -> Vec<usize> {
        let p = self.p.get();
        let mut counts = vec![0; p];
        for &l in &self.occupied {
            counts[l % p] += 1;
        }
        counts
    }

    pub fn beta(&self) -> BetaSequence {
        BetaSequence {
            values: self.occupied.iter().rev().copied().collect(),
        }
    }

    pub fn partition(&self) -> Partition {
        partition_from_beta(&self.beta())
    }

    /// Slides every bead as far up its runner as it goes. Returns the display
    /// of the p-core and the number of single-row moves made.
    pub fn push_up(&self) -> (AbacusDisplay, usize) {
        let p = self.p.get();
        let mut seen = vec![0usize; p];
        let mut moves = 0;
        let mut occupied = Vec::with_capacity(self.r);
        for &l in &self.occupied {
            let runner = l % p;
            let row = l / p;
            moves += row - seen[runner];
            occupied.push(runner + seen[runner] * p);
            seen[runner] += 1;
        }
        occupied.sort_unstable();
        let core = AbacusDisplay {
            p: self.p,
            r: self.r,
            occupied,
        };
        (core, moves)
    }

    /// True when no bead has an empty spot above it.
    pub fn is_pushed_up(&self) -> bool {
        let p = self.p.get();
        self.occupied
            .iter()
            .all(|&l| l < p || self.is_occupied(l - p))
    }

    /// Beads at `l ≥ 1` with `l - 1` empty, ordered by increasing node row.
    pub fn removable_beads(&self) -> Vec<RemovableBead> {
        let p = self.p.get();
        let r = self.r;
        let mut out = Vec::new();
        // walk from the largest position: the k-th largest bead is β_k
        for (k, &l) in self.occupied.iter().rev().enumerate() {
            if l == 0 || self.is_occupied(l - 1) {
                continue;
            }
            let row = k + 1;
            out.push(RemovableBead {
                position: l,
                node: Node::new(row, l + row - r),
                residue: l % p,
            });
        }
        out
    }

    /// Moves the bead at `position` to the empty `position - 1`.
    pub fn slide_left(&self, position: usize) -> Result<AbacusDisplay> {
        if position == 0 || !self.is_occupied(position) || self.is_occupied(position - 1) {
            return Err(Error::NotRemovableBead { position });
        }
        let occupied = self
            .occupied
            .iter()
            .map(|&l| if l == position { l - 1 } else { l })
            .collect();
        Ok(AbacusDisplay {
            p: self.p,
            r: self.r,
            occupied,
        })
    }

    /// The same partition with `rows` extra full rows of beads on top.
    pub fn with_extra_rows(&self, rows: usize) -> AbacusDisplay {
        let p = self.p.get();
        let occupied = (0..rows * p)
            .chain(self.occupied.iter().map(|&l| l + rows * p))
            .collect();
        AbacusDisplay {
            p: self.p,
            r: self.r + rows * p,
            occupied,
        }
    }
}

pub fn abacus_display(lam: &Partition, p: Prime, beads: BeadCount) -> Result<AbacusDisplay> {
    AbacusDisplay::new(lam, p, beads)
}

pub fn push_up(disp: &AbacusDisplay) -> (AbacusDisplay, usize) {
    disp.push_up()
}

pub fn runner_counts(disp: &AbacusDisplay) -> Vec<usize> {
    disp.runner_counts()
}

pub fn removable_beads(disp: &AbacusDisplay) -> Vec<RemovableBead> {
    disp.removable_beads()
}

fn canonical(lam: &Partition, p: Prime) -> AbacusDisplay {
    AbacusDisplay::new(lam, p, BeadCount::Auto).expect("canonical bead count is valid")
}

/// The p-core and p-weight read off the pushed-up display.
pub fn p_core_and_weight(lam: &Partition, p: Prime) -> (Partition, usize) {
    let (core, moves) = canonical(lam, p).push_up();
    (core.partition(), moves)
}

pub fn p_core(lam: &Partition, p: Prime) -> Partition {
    p_core_and_weight(lam, p).0
}

pub fn p_weight(lam: &Partition, p: Prime) -> usize {
    canonical(lam, p).push_up().1
}

/// The p-tuple of partitions `(λ(0), …, λ(p-1))`; component `i` lists how
/// far each bead on runner `i` slides when pushed up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PQuotient {
    components: Vec<Partition>,
}

impl PQuotient {
    pub fn new(components: Vec<Partition>) -> Self {
        PQuotient { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Sum of component sizes; equals the p-weight.
    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// The common component when all components coincide.
    pub fn constant_component(&self) -> Option<&Partition> {
        let first = self.components.first()?;
        self.components.iter().all(|c| c == first).then_some(first)
    }
}

impl fmt::Display for PQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .components
            .iter()
            .map(Partition::to_tuple_string)
            .collect();
        write!(f, "[{}]", body.join(", "))
    }
}

/// The p-quotient with respect to an arbitrary display.
pub fn quotient_of_display(disp: &AbacusDisplay) -> PQuotient {
    let components = (0..disp.p().get())
        .map(|runner| {
            // gaps above the j-th bead from the top, weakly increasing
            let mut gaps: Vec<usize> = disp
                .runner_rows(runner)
                .into_iter()
                .enumerate()
                .map(|(j, row)| row - (j + 1))
                .collect();
            gaps.reverse();
            Partition::from_sorted(gaps)
        })
        .collect();
    PQuotient { components }
}

pub fn p_quotient(lam: &Partition, p: Prime) -> PQuotient {
    quotient_of_display(&canonical(lam, p))
}

/// The unique partition with the given p-core and p-quotient.
pub fn reconstruct(core: &Partition, quotient: &PQuotient, p: Prime) -> Result<Partition> {
    let pp = p.get();
    if quotient.components.len() != pp {
        return Err(Error::QuotientLength {
            got: quotient.components.len(),
            expected: pp,
        });
    }
    let (pushed, moves) = canonical(core, p).push_up();
    if moves != 0 {
        return Err(Error::NotACore {
            partition: core.clone(),
            p: pp,
        });
    }
    let counts = pushed.runner_counts();
    let extra = quotient
        .components
        .iter()
        .zip(&counts)
        .map(|(c, &n)| c.len().saturating_sub(n))
        .max()
        .unwrap_or(0);
    let mut positions = Vec::with_capacity(pushed.beads() + extra * pp);
    for (runner, (component, &n)) in quotient.components.iter().zip(&counts).enumerate() {
        let n = n + extra;
        // smallest gaps go to the top beads
        for j in 0..n {
            let gap = component.part(n - j);
            let row = j + 1 + gap;
            positions.push(runner + (row - 1) * pp);
        }
    }
    Ok(AbacusDisplay::from_positions(p, positions)?.partition())
}

/// Glyphs used by [`render_ascii`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderStyle {
    pub bead: char,
    pub empty: char,
}

impl RenderStyle {
    pub const UNICODE: RenderStyle = RenderStyle {
        bead: '●',
        empty: '|',
    };
    pub const ASCII: RenderStyle = RenderStyle {
        bead: 'O',
        empty: '.',
    };
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle::UNICODE
    }
}

/// Text rendering: a header of runner labels `0 … p-1`, then one line per
/// abacus row from the top down to the row of the last bead. Every column is
/// right-aligned to the width of the largest label and columns are separated
/// by one space. Each line ends in `\n`.
pub fn render_ascii(disp: &AbacusDisplay, style: RenderStyle) -> String {
    let p = disp.p().get();
    let width = (p - 1).to_string().len();
    let mut out = String::new();
    let header: Vec<String> = (0..p).map(|i| format!("{i:>width$}")).collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for row in 0..disp.rows() {
        let cells: Vec<String> = (0..p)
            .map(|runner| {
                let glyph = if disp.is_occupied(runner + row * p) {
                    style.bead
                } else {
                    style.empty
                };
                format!("{glyph:>width$}")
            })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
