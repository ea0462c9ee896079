use std::fmt::Write as _;

use numset::verify::{Statement, VerificationReport};
use numset::{ComplementReport, ComplementSequence, NumericalSet, SetScalars};
use serde::Serialize;

fn list(items: &[u32]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn signed_base(base: Option<u32>) -> String {
    base.map_or_else(|| "undefined".to_string(), |b| b.to_string())
}

#[derive(Serialize)]
pub struct Analysis {
    set: NumericalSet,
    gaps: Vec<u32>,
    scalars: SetScalars,
    is_semigroup: bool,
    associated_semigroup: NumericalSet,
    small_elements: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    atoms: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    small_atoms: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_embedding_dimension: Option<bool>,
    diagram: Vec<u32>,
    c1: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement: Option<ComplementReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement_error: Option<String>,
}

impl Analysis {
    pub fn of(set: &NumericalSet) -> Self {
        let semigroup = set.is_semigroup();
        let diagram = set.diagram();
        let (complement, complement_error) = match set.complement_report() {
            Ok(report) => (Some(report), None),
            Err(e) => (None, Some(e.to_string())),
        };
        Analysis {
            set: set.clone(),
            gaps: set.gaps().to_vec(),
            scalars: set.scalars(),
            is_semigroup: semigroup,
            associated_semigroup: set.associated_semigroup(),
            small_elements: set.small_elements(),
            atoms: set.atoms().ok(),
            small_atoms: set.small_atoms().ok(),
            max_embedding_dimension: set.is_max_embedding_dimension().ok(),
            diagram: diagram.rows().to_vec(),
            c1: diagram.c1(),
            complement,
            complement_error,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.scalars;
        writeln!(out, "set: {}", self.set).unwrap();
        writeln!(out, "gaps: {}", list(&self.gaps)).unwrap();
        writeln!(out, "frobenius: {}", s.frobenius).unwrap();
        writeln!(out, "genus: {}", s.genus).unwrap();
        writeln!(out, "multiplicity: {}", s.multiplicity).unwrap();
        writeln!(out, "base: {}", signed_base(s.base)).unwrap();
        match &self.atoms {
            Some(atoms) => {
                let generators = atoms
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(out, "semigroup: yes, <{generators}>").unwrap();
                writeln!(out, "atoms: {}", list(atoms)).unwrap();
                writeln!(out, "embedding dimension: {}", atoms.len()).unwrap();
                writeln!(
                    out,
                    "small atoms: {}",
                    list(self.small_atoms.as_deref().unwrap_or(&[]))
                )
                .unwrap();
                writeln!(
                    out,
                    "max embedding dimension: {}",
                    if self.max_embedding_dimension == Some(true) {
                        "yes"
                    } else {
                        "no"
                    }
                )
                .unwrap();
            }
            None => writeln!(out, "semigroup: no").unwrap(),
        }
        writeln!(out, "associated semigroup: {}", self.associated_semigroup).unwrap();
        writeln!(out, "small elements: {}", list(&self.small_elements)).unwrap();
        writeln!(out, "diagram: {:?}", self.diagram).unwrap();
        writeln!(out, "c1: {}", self.c1).unwrap();
        match (&self.complement, &self.complement_error) {
            (Some(report), _) => out.push_str(&complement_text(report)),
            (None, Some(e)) => writeln!(out, "complement: error: {e}").unwrap(),
            (None, None) => {}
        }
        out
    }
}

pub fn complement_text(report: &ComplementReport) -> String {
    let s = &report.original_scalars;
    let t = &report.complement_scalars;
    let mut out = String::new();
    writeln!(out, "complement: {}", report.complement).unwrap();
    writeln!(
        out,
        "complement frobenius: {} (B-1 = {}, tight: {})",
        t.frobenius,
        i64::from(s.base.unwrap_or(0)) - 1,
        if report.base_bound_tight { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(
        out,
        "complement genus: {} (delta {})",
        t.genus, report.delta_genus
    )
    .unwrap();
    writeln!(out, "complement base: {}", signed_base(t.base)).unwrap();
    let violations = report.violations();
    if violations.is_empty() {
        writeln!(out, "identities: all hold").unwrap();
    } else {
        for v in violations {
            writeln!(out, "identity violated: {v}").unwrap();
        }
    }
    out
}

#[derive(Serialize)]
pub struct SequenceJson<'a> {
    length: usize,
    terms: &'a [NumericalSet],
    c1: Vec<u32>,
}

impl<'a> SequenceJson<'a> {
    pub fn of(sequence: &'a ComplementSequence) -> Self {
        SequenceJson {
            length: sequence.len(),
            terms: &sequence.terms,
            c1: sequence.c1_values(),
        }
    }
}

pub fn sequence_text(sequence: &ComplementSequence) -> String {
    let mut out = String::new();
    for (i, (term, c1)) in sequence.terms.iter().zip(sequence.c1_values()).enumerate() {
        writeln!(out, "S^({i}) = {term}  c1 = {c1}").unwrap();
    }
    writeln!(out, "steps: {}", sequence.len()).unwrap();
    out
}

pub fn verification_text(report: &VerificationReport, statement: Statement) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "statement: {} ({})",
        report.statement,
        statement.description()
    )
    .unwrap();
    writeln!(out, "domain: F(S) <= {}", report.domain_bound).unwrap();
    writeln!(out, "instances checked: {}", report.instances_checked).unwrap();
    writeln!(out, "counterexamples: {}", report.counterexamples.len()).unwrap();
    for c in &report.counterexamples {
        writeln!(out, "  {c}").unwrap();
    }
    writeln!(out, "elapsed: {:?}", report.wall_time).unwrap();
    out
}
