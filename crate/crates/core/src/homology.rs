//! Białynicki-Birula assembly of the Poincaré polynomial.
//!
//! Every component `X` contributes its own Poincaré polynomial shifted by
//! `x^{2p(X)}`, where `p(X)` counts tangent weights pairing positively with a
//! generic one-parameter subgroup.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{census, CensusCounts, FixedComponent, Kind};
use crate::error::{Error, Result};
use crate::golden::{self, MODULI_DIMENSION};
use crate::tables;
use crate::tangent::{tangent_weights, TangentModel};
use crate::weights::{pair_values, positive_part, OneParamSubgroup};

/// Number of Betti numbers `b_0 … b_52`.
pub const BETTI_LEN: usize = 2 * MODULI_DIMENSION + 1;

/// The alternative subgroup used for the independence check.
pub const ALTERNATE_LAMBDA: OneParamSubgroup = OneParamSubgroup::new(0, 2, 13);

/// Poincaré polynomial of a fixed surface: `1 + 4x² + x⁴`.
const SURFACE_FACTOR: [u64; 3] = [1, 4, 1];
const LINE_FACTOR: [u64; 2] = [1, 1];
const POINT_FACTOR: [u64; 1] = [1];

fn factor(kind: Kind) -> &'static [u64] {
    match kind {
        Kind::Point => &POINT_FACTOR,
        Kind::Line => &LINE_FACTOR,
        Kind::Surface => &SURFACE_FACTOR,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDatum {
    pub component_id: String,
    pub kind: Kind,
    /// Number of positive weights.
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareSummary {
    /// `b_0 … b_52`; odd entries are stored and are zero.
    pub betti: Vec<u64>,
    pub euler: u64,
    /// `h^{p,q}` for `0 ≤ p, q ≤ 26`.
    pub hodge: Vec<Vec<u64>>,
    pub census: CensusCounts,
}

/// The first nonzero weight of `t` that pairs to zero with `eval`.
pub fn genericity_failure(
    t: &TangentModel,
    eval: OneParamSubgroup,
) -> Option<crate::weights::Character> {
    t.weights
        .iter()
        .map(|(w, _)| w)
        .find(|&w| !w.is_trivial() && eval.pair(w) == 0)
}

/// Positive-weight count of a precomputed tangent model.
pub fn cell_from_tangent(
    c: &FixedComponent,
    t: &TangentModel,
    lambda: OneParamSubgroup,
) -> Result<CellDatum> {
    let eval = c.eval_vector(lambda);
    if let Some(weight) = genericity_failure(t, eval) {
        return Err(Error::NonGenericLambda {
            component: c.id.clone(),
            lambda,
            weight,
        });
    }
    Ok(CellDatum {
        component_id: c.id.clone(),
        kind: c.kind,
        p: positive_part(&pair_values(&t.weights, eval)),
    })
}

pub fn cell_dimension(c: &FixedComponent, lambda: OneParamSubgroup) -> Result<CellDatum> {
    cell_from_tangent(c, &tangent_weights(c)?, lambda)
}

pub fn assemble(cells: &[CellDatum]) -> PoincareSummary {
    let mut betti = vec![0u64; BETTI_LEN];
    let mut hodge = vec![vec![0u64; MODULI_DIMENSION + 1]; MODULI_DIMENSION + 1];
    let mut counts = CensusCounts::default();
    for cell in cells {
        match cell.kind {
            Kind::Point => counts.points += 1,
            Kind::Line => counts.lines += 1,
            Kind::Surface => counts.surfaces += 1,
        }
        for (shift, &coef) in factor(cell.kind).iter().enumerate() {
            let p = cell.p + shift;
            if let Some(b) = betti.get_mut(2 * p) {
                *b += coef;
                hodge[p][p] += coef;
            }
        }
    }
    PoincareSummary {
        euler: betti.iter().sum(),
        betti,
        hodge,
        census: counts,
    }
}

/// Cells for every component; fails on the first non-generic component.
pub fn cells(components: &[FixedComponent], lambda: OneParamSubgroup) -> Result<Vec<CellDatum>> {
    components
        .iter()
        .map(|c| cell_dimension(c, lambda))
        .collect()
}

pub fn poincare(
    components: &[FixedComponent],
    lambda: OneParamSubgroup,
) -> Result<PoincareSummary> {
    Ok(assemble(&cells(components, lambda)?))
}

impl PoincareSummary {
    pub fn hodge_diagonal(&self) -> Vec<u64> {
        (0..self.hodge.len()).map(|p| self.hodge[p][p]).collect()
    }

    /// `Σ` of the Euler characteristics of the components.
    pub fn euler_from_census(&self) -> u64 {
        self.census.points as u64 * Kind::Point.euler()
            + self.census.lines as u64 * Kind::Line.euler()
            + self.census.surfaces as u64 * Kind::Surface.euler()
    }

    pub fn is_palindromic(&self) -> bool {
        self.betti.iter().eq(self.betti.iter().rev())
    }

    pub fn odd_part_vanishes(&self) -> bool {
        self.betti.iter().skip(1).step_by(2).all(|&b| b == 0)
    }

    pub fn hodge_is_diagonal(&self) -> bool {
        self.hodge
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(q, &h)| p == q || h == 0))
    }

    /// `P(x)` in descending powers, e.g. `x^52 + 2x^50 + … + 1`.
    pub fn polynomial_text(&self) -> String {
        let mut out = String::new();
        for (m, &b) in self.betti.iter().enumerate().rev().filter(|(_, &b)| b != 0) {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            match (b, m) {
                (_, 0) => write!(out, "{b}"),
                (1, 1) => write!(out, "x"),
                (1, _) => write!(out, "x^{m}"),
                (_, 1) => write!(out, "{b}x"),
                _ => write!(out, "{b}x^{m}"),
            }
            .expect("writing to a String");
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self, lambda: OneParamSubgroup) -> serde_json::Value {
        serde_json::json!({
            "lambda": lambda.entries(),
            "betti": self.betti,
            "euler": self.euler,
            "hodge_diagonal": self.hodge_diagonal(),
            "census": self.census,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Items examined.
    pub count: usize,
    pub counterexample: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub lambda: OneParamSubgroup,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {:<22} n={:<5} {}", c.name, c.count, c.detail);
            if let Some(id) = &c.counterexample {
                let _ = write!(out, " [first counterexample: {id}]");
            }
            out.push('\n');
        }
        out
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(
        &mut self,
        name: &'static str,
        count: usize,
        counterexample: Option<String>,
        detail: impl Into<String>,
    ) {
        self.0.push(CheckResult {
            name,
            passed: counterexample.is_none(),
            count,
            counterexample,
            detail: detail.into(),
        });
    }

    fn flag(&mut self, name: &'static str, count: usize, ok: bool, detail: impl Into<String>) {
        let ce = (!ok).then(|| "summary".to_string());
        self.push(name, count, ce, detail);
    }
}

/// Runs every invariant on the given catalog and subgroup.
pub fn verify(components: &[FixedComponent], lambda: OneParamSubgroup) -> VerificationReport {
    let mut checks = Checks(Vec::new());
    let n = components.len();

    let counts = census(components);
    let expected = CensusCounts {
        points: golden::THEOREM_POINTS,
        lines: golden::THEOREM_LINES,
        surfaces: golden::THEOREM_SURFACES,
    };
    checks.flag(
        "census",
        n,
        counts == expected,
        format!(
            "{} points, {} lines, {} surfaces",
            counts.points, counts.lines, counts.surfaces
        ),
    );

    let mut seen = HashSet::new();
    let dup = components
        .iter()
        .find(|c| !seen.insert(c.id.as_str()))
        .map(|c| c.id.clone());
    checks.push("unique-ids", n, dup, "component ids are distinct");

    let tangents: Vec<(usize, Result<TangentModel>)> = components
        .iter()
        .enumerate()
        .map(|(i, c)| (i, tangent_weights(c)))
        .collect();
    let first_err = tangents.iter().find_map(|(i, t)| {
        t.as_ref()
            .err()
            .map(|e| format!("{}: {e}", components[*i].id))
    });
    checks.push(
        "tangent-26",
        n,
        first_err,
        "26 weights, strict containment, coordinates in [-6,6]",
    );
    let ok: Vec<(&FixedComponent, &TangentModel)> = tangents
        .iter()
        .filter_map(|(i, t)| t.as_ref().ok().map(|t| (&components[*i], t)))
        .collect();

    let bad = ok
        .iter()
        .find(|(_, t)| t.weights.iter().any(|(w, _)| w.degree() != 0))
        .map(|(c, _)| c.id.clone());
    checks.push(
        "degree-zero",
        ok.len(),
        bad,
        "weights are characters of the torus",
    );

    let bad = ok
        .iter()
        .find(|(c, t)| t.chi0_multiplicity != c.dimension())
        .map(|(c, t)| {
            format!(
                "{} (chi0 {}, dim {})",
                c.id,
                t.chi0_multiplicity,
                c.dimension()
            )
        });
    checks.push(
        "chi0-dimension",
        ok.len(),
        bad,
        "zero-weight multiplicity equals dimension",
    );

    let mut cells = Vec::with_capacity(ok.len());
    let mut nongeneric = None;
    for (c, t) in &ok {
        match cell_from_tangent(c, t, lambda) {
            Ok(cell) => cells.push(cell),
            Err(e) => {
                nongeneric.get_or_insert_with(|| e.to_string());
                let eval = c.eval_vector(lambda);
                cells.push(CellDatum {
                    component_id: c.id.clone(),
                    kind: c.kind,
                    p: positive_part(&pair_values(&t.weights, eval)),
                });
            }
        }
    }
    checks.push(
        "lambda-generic",
        ok.len(),
        nongeneric,
        format!("lambda {lambda} pairs nonzero with every nonzero weight"),
    );

    let bad = cells
        .iter()
        .find(|c| c.p + c.kind.dimension() > MODULI_DIMENSION)
        .map(|c| c.component_id.clone());
    checks.push("cell-range", cells.len(), bad, "0 <= p <= 26 - dim");

    let summary = assemble(&cells);
    checks.flag(
        "palindrome",
        BETTI_LEN,
        summary.is_palindromic() && summary.odd_part_vanishes(),
        "b_m = b_{52-m}, odd Betti numbers vanish",
    );
    checks.flag(
        "golden-betti",
        BETTI_LEN,
        summary.betti == golden::theorem_betti(),
        summary.polynomial_text(),
    );
    let by_census = summary.euler_from_census();
    checks.flag(
        "euler",
        2,
        summary.euler == by_census && summary.euler == golden::THEOREM_EULER,
        format!(
            "sum of Betti numbers {}, sum over components {}",
            summary.euler, by_census
        ),
    );
    let diag = summary.hodge_diagonal();
    let hodge_ok = summary.hodge_is_diagonal()
        && diag
            .iter()
            .enumerate()
            .all(|(p, &h)| h == summary.betti[2 * p])
        && diag.iter().sum::<u64>() == golden::THEOREM_EULER;
    checks.flag(
        "hodge",
        diag.len(),
        hodge_ok,
        "h^{pq} = 0 for p != q, h^{pp} = b_{2p}",
    );

    let other = if lambda == ALTERNATE_LAMBDA {
        OneParamSubgroup::DEFAULT
    } else {
        ALTERNATE_LAMBDA
    };
    let rerun = ok
        .iter()
        .map(|(c, t)| cell_from_tangent(c, t, other))
        .collect::<Result<Vec<_>>>();
    match rerun {
        Ok(cells) => {
            let same = assemble(&cells).betti == summary.betti;
            checks.flag(
                "lambda-independence",
                cells.len(),
                same,
                format!("Betti vector unchanged at lambda {other}"),
            );
        }
        Err(e) => checks.push(
            "lambda-independence",
            ok.len(),
            Some(e.to_string()),
            format!("lambda {other} is not generic"),
        ),
    }

    for n in 1..=4u8 {
        let name = ["table-1", "table-2", "table-3", "table-4"][usize::from(n - 1)];
        match tables::diff(n) {
            Ok(diffs) => {
                let rows = golden::table(n).map_or(0, <[_]>::len);
                let ce = diffs.first().map(|d| d.to_string());
                checks.push(name, rows, ce, format!("{} differing cells", diffs.len()));
            }
            Err(e) => checks.push(name, 0, Some(e.to_string()), "regeneration failed"),
        }
    }

    VerificationReport {
        lambda,
        checks: checks.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_all;

    fn cell(kind: Kind, p: usize) -> CellDatum {
        CellDatum {
            component_id: String::new(),
            kind,
            p,
        }
    }

    #[test]
    fn empty_assembly_is_zero() {
        let s = assemble(&[]);
        assert!(s.betti.iter().all(|&b| b == 0));
        assert_eq!(s.euler, 0);
        assert_eq!(s.polynomial_text(), "0");
    }

    #[test]
    fn factors_by_kind() {
        let s = assemble(&[
            cell(Kind::Surface, 1),
            cell(Kind::Line, 0),
            cell(Kind::Point, 3),
        ]);
        assert_eq!(&s.betti[..8], &[1, 0, 2, 0, 4, 0, 2, 0]);
        assert_eq!(s.euler, 9);
        assert_eq!(s.euler, s.euler_from_census());
        assert_eq!(s.hodge[2][2], 4);
        assert_eq!(s.polynomial_text(), "2x^6 + 4x^4 + 2x^2 + 1");
    }

    #[test]
    fn assembly_is_order_independent() {
        let mut cs = vec![
            cell(Kind::Line, 5),
            cell(Kind::Point, 0),
            cell(Kind::Surface, 9),
        ];
        let a = assemble(&cs);
        cs.reverse();
        assert_eq!(a, assemble(&cs));
    }

    #[test]
    fn chi0_only_weights_give_p_zero() {
        let comps = enumerate_all().unwrap();
        let mut t = tangent_weights(&comps[0]).unwrap();
        t.weights = std::iter::repeat_n(crate::weights::Character::ZERO, 26).collect();
        let c = cell_from_tangent(&comps[0], &t, OneParamSubgroup::DEFAULT).unwrap();
        assert_eq!(c.p, 0);
    }

    #[test]
    fn theorem_polynomial() {
        let comps = enumerate_all().unwrap();
        let s = poincare(&comps, OneParamSubgroup::DEFAULT).unwrap();
        assert_eq!(s.betti, golden::theorem_betti());
        assert_eq!(s.euler, 1695);
        assert_eq!(s.hodge_diagonal().iter().sum::<u64>(), 1695);
        assert!(s.polynomial_text().starts_with("x^52 + 2x^50 + 6x^48"));
        assert!(s.polynomial_text().ends_with("6x^4 + 2x^2 + 1"));
    }

    #[test]
    fn source_and_sink_exist() {
        let comps = enumerate_all().unwrap();
        let cs = cells(&comps, OneParamSubgroup::DEFAULT).unwrap();
        assert!(cs.iter().any(|c| c.p == 0));
        assert!(cs.iter().any(|c| c.p == 26));
    }

    #[test]
    fn degenerate_lambda_is_rejected() {
        let comps = enumerate_all().unwrap();
        let err = poincare(&comps, OneParamSubgroup::new(0, 1, 1)).unwrap_err();
        assert!(matches!(err, Error::NonGenericLambda { .. }));
        let report = verify(&comps, OneParamSubgroup::new(0, 1, 1));
        assert!(!report.check("lambda-generic").unwrap().passed);
    }

    #[test]
    fn verify_passes_at_both_subgroups() {
        let comps = enumerate_all().unwrap();
        for lambda in [OneParamSubgroup::DEFAULT, ALTERNATE_LAMBDA] {
            let r = verify(&comps, lambda);
            assert!(r.passed(), "{}", r.to_text());
        }
    }
}
