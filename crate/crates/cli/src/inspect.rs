use abacus_core::{
    abacus_display, block_descriptor, complexity_upper_bound, conjectured_complexity,
    defect_p_rank, is_p_by_p, is_p_by_p_recursive, p_by_p_depth, p_weight, quotient_of_display,
    removable_beads, restriction_factors, BeadCount, BlockDescriptor, Node, Partition, Prime,
    Result,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Factor {
    pub removed: Node,
    pub residue: usize,
    pub partition: Partition,
    pub weight: usize,
}

/// Everything `inspect` reports. Field order is the JSON schema order.
#[derive(Debug, Serialize)]
pub struct InspectReport {
    pub partition: Partition,
    pub canonical: String,
    pub size: usize,
    pub p: Prime,
    pub beads: usize,
    pub runner_counts: Vec<usize>,
    pub core: Partition,
    pub weight: usize,
    pub quotient: Vec<Partition>,
    pub block: BlockDescriptor,
    pub defect_p_rank: usize,
    pub is_pxp: bool,
    pub pxp_depth: Option<usize>,
    pub is_pxp_recursive: bool,
    pub complexity_upper_bound: usize,
    pub restriction_factors: Vec<Factor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<Conjecture>,
}

/// Value predicted by the open conjecture; not a proven result.
#[derive(Debug, Serialize)]
pub struct Conjecture {
    pub conjectural: bool,
    pub complexity: Option<usize>,
    pub note: &'static str,
}

pub fn build(
    lam: &Partition,
    p: Prime,
    beads: BeadCount,
    conjecture: bool,
) -> Result<InspectReport> {
    let disp = abacus_display(lam, p, beads)?;
    let block = block_descriptor(lam, p);
    let quotient = quotient_of_display(&disp).components().to_vec();
    let factors = if lam.is_empty() {
        Vec::new()
    } else {
        let beads = removable_beads(&disp);
        restriction_factors(lam)?
            .into_iter()
            .zip(beads)
            .map(|(partition, bead)| Factor {
                removed: bead.node,
                residue: bead.residue,
                weight: p_weight(&partition, p),
                partition,
            })
            .collect()
    };
    let conjecture = conjecture.then(|| {
        let complexity = conjectured_complexity(lam, p);
        Conjecture {
            conjectural: true,
            complexity,
            note: if complexity.is_some() {
                "conjectured to equal the block weight (not proven)"
            } else {
                "p x p: proven to be below the block weight; exact value open"
            },
        }
    });
    Ok(InspectReport {
        partition: lam.clone(),
        canonical: lam.to_string(),
        size: lam.size(),
        p,
        beads: disp.beads(),
        runner_counts: disp.runner_counts(),
        core: block.core.clone(),
        weight: block.weight,
        quotient,
        defect_p_rank: defect_p_rank(&block),
        block,
        is_pxp: is_p_by_p(lam, p),
        pxp_depth: p_by_p_depth(lam, p),
        is_pxp_recursive: is_p_by_p_recursive(lam, p),
        complexity_upper_bound: complexity_upper_bound(lam, p),
        restriction_factors: factors,
        conjecture,
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl InspectReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
        line("partition", self.canonical.clone());
        line("size", self.size.to_string());
        line("p", self.p.to_string());
        line("beads", self.beads.to_string());
        line("runner counts", join(&self.runner_counts));
        line("core", self.core.to_tuple_string());
        line("weight", self.weight.to_string());
        let quotient = match self.quotient.first() {
            Some(first) if self.quotient.iter().all(|c| c == first) => {
                format!("{}×{}", self.quotient.len(), first.to_tuple_string())
            }
            _ => self
                .quotient
                .iter()
                .map(Partition::to_tuple_string)
                .collect::<Vec<_>>()
                .join(" | "),
        };
        line("quotient", quotient);
        line("defect p-rank", self.defect_p_rank.to_string());
        line("pxp", self.is_pxp.to_string());
        line(
            "pxp depth",
            self.pxp_depth
                .map_or("unbounded".to_string(), |d| d.to_string()),
        );
        line("pxp recursive", self.is_pxp_recursive.to_string());
        line(
            "complexity upper bound",
            self.complexity_upper_bound.to_string(),
        );
        if let Some(c) = &self.conjecture {
            let value = c
                .complexity
                .map_or(format!("< {}", self.weight), |v| v.to_string());
            line("conjectured complexity (conjectural)", value);
        }
        line(
            "restriction factors",
            self.restriction_factors.len().to_string(),
        );
        for f in &self.restriction_factors {
            out.push_str(&format!(
                "  {} weight {} (removed {}, residue {})\n",
                f.partition, f.weight, f.removed, f.residue
            ));
        }
        out
    }
}
