//! Regeneration of the four fixed-point tables from the pipeline.
//!
//! The support column comes from the ideal closure of each row's own
//! generators. The affine-line and limit columns come from zero-weight counts
//! of candidate components. Printed rows that are permutations of a catalog
//! row are regenerated from that row and mapped through the permutation,
//! which is sound because the weights are equivariant.

use std::fmt;

use serde::Serialize;

use crate::catalog::{
    monomial_list, rows, support_generators, CatalogRow, Family, Kind, RowBody, Stratum,
};
use crate::error::{Error, Result};
use crate::golden::{self, GoldenRow};
use crate::tangent::{classify_limit, stratum_chi0, tangent_weights, LimitClass};
use crate::weights::{ideal_degree5, msub, sigma, Character, Permutation, WeightMultiset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    pub family: Family,
    pub ls: Vec<Character>,
    pub qs: Vec<Character>,
    pub support_complement: WeightMultiset,
    pub affine_lines: WeightMultiset,
    /// As printed: divided by `l` in Table 4.
    pub limits: WeightMultiset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Column {
    Support,
    AffineLines,
    Limits,
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Column::Support => "support",
            Column::AffineLines => "affine-lines",
            Column::Limits => "limits",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub table: u8,
    pub row: String,
    pub column: Column,
    pub expected: WeightMultiset,
    pub found: WeightMultiset,
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "table {} row {} column {}: expected {}, regenerated {}",
            self.table,
            self.row,
            self.column,
            monomial_list(&self.expected),
            monomial_list(&self.found)
        )
    }
}

fn as_set(cs: &[Character]) -> WeightMultiset {
    cs.iter().copied().collect::<WeightMultiset>().support()
}

/// A catalog row and a permutation carrying it onto the printed row.
fn base_for(g: &GoldenRow, catalog: &[CatalogRow]) -> Option<(CatalogRow, Permutation)> {
    let (gl, gq) = (as_set(&g.ls()), as_set(&g.qs()));
    catalog
        .iter()
        .filter(|r| r.family == g.family)
        .find_map(|r| {
            Permutation::ALL
                .into_iter()
                .find(|&p| as_set(&r.ls).permute(p) == gl && as_set(&r.qs).permute(p) == gq)
                .map(|p| (r.clone(), p))
        })
}

/// Affine-line and limit quintics of a catalog row, before any permutation.
fn classify_row(row: &CatalogRow) -> Result<(WeightMultiset, WeightMultiset)> {
    let script_lines = match &row.body {
        RowBody::Quintic { lines, .. } => as_set(lines),
        RowBody::Fixed { .. } => WeightMultiset::new(),
    };
    let mut lines = WeightMultiset::new();
    let mut limits = WeightMultiset::new();
    for d in row.support()?.iter_expanded() {
        let kind = if script_lines.contains(d) {
            Kind::Line
        } else {
            Kind::Point
        };
        let c = row.candidate(Some(d), kind, Permutation::IDENTITY, 0);
        let limit = classify_limit(&c)?;
        if limit != LimitClass::Interior {
            limits.insert(d);
        }
        let is_line = match row.stratum() {
            // a fixed surface meets the divisor in a curve of fixed lines
            Stratum::M0 => kind == Kind::Line || tangent_weights(&c)?.chi0_multiplicity == 2,
            _ => stratum_chi0(&c)? == 1,
        };
        if is_line {
            lines.insert(d);
        }
    }
    Ok((lines, limits))
}

fn regenerate_row(g: &GoldenRow, catalog: &[CatalogRow]) -> Result<TableRow> {
    let (ls, qs) = (g.ls(), g.qs());
    let (base, p) = base_for(g, catalog).ok_or_else(|| Error::CatalogIntegrity {
        row: g.label(),
        detail: "no catalog row is a permutation of this table row".to_string(),
    })?;
    let (gens, degree) = support_generators(g.family, &ls, &qs);
    let support = ideal_degree5(&gens, degree)?;
    let (lines, limits) = classify_row(&base)?;
    let offset = if g.table == 4 {
        -ls[0]
    } else {
        Character::ZERO
    };
    Ok(TableRow {
        table: g.table,
        family: g.family,
        support_complement: msub(&sigma::quintics(), &support),
        affine_lines: lines.permute(p),
        limits: limits.permute(p).shift(offset),
        ls,
        qs,
    })
}

/// All rows of table `n`, in printed order.
pub fn regenerate(n: u8) -> Result<Vec<TableRow>> {
    let printed = golden::table(n).ok_or(Error::UnknownTable(n))?;
    let catalog = rows();
    printed
        .iter()
        .map(|g| regenerate_row(g, &catalog))
        .collect()
}

/// Cell-by-cell differences between the regenerated and printed table `n`.
pub fn diff(n: u8) -> Result<Vec<TableDiff>> {
    let printed = golden::table(n).ok_or(Error::UnknownTable(n))?;
    let regenerated = regenerate(n)?;
    let mut out = Vec::new();
    for (g, r) in printed.iter().zip(&regenerated) {
        let pairs = [
            (
                Column::Support,
                g.support_complement(),
                &r.support_complement,
            ),
            (Column::AffineLines, g.affine_lines(), &r.affine_lines),
            (Column::Limits, g.limits_as_printed(), &r.limits),
        ];
        for (column, expected, found) in pairs {
            if expected.support() != found.support() {
                out.push(TableDiff {
                    table: n,
                    row: g.label(),
                    column,
                    expected,
                    found: found.clone(),
                });
            }
        }
    }
    Ok(out)
}

impl TableRow {
    pub fn label(&self) -> String {
        let join = |cs: &[Character]| {
            cs.iter()
                .map(|c| c.to_monomial())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.table {
            1 | 3 => format!("({})", join(&self.qs)),
            2 => format!("({}) ({})", join(&self.qs), join(&self.ls)),
            _ => format!("l={} q={}", join(&self.ls), join(&self.qs)),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mono = |m: &WeightMultiset| -> Vec<String> {
            m.iter_expanded().map(Character::to_monomial).collect()
        };
        serde_json::json!({
            "table": self.table,
            "family": self.family,
            "row": self.label(),
            "support_complement": mono(&self.support_complement),
            "affine_lines": mono(&self.affine_lines),
            "limits": mono(&self.limits),
        })
    }
}
