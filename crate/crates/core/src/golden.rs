//! Reference data shipped with the library: the published Betti numbers and
//! the four fixed-point tables, transcribed verbatim.
//!
//! Monomials are written as strings (`"X2Y2Z"`) and parsed on demand so that
//! the transcription can be compared against the printed tables by eye.
//! Supports are stored as their complement in `Σ^5`, exactly as printed.

use crate::catalog::Family;
use crate::weights::{Character, WeightMultiset};

/// Even-degree Betti numbers `b_0, b_2, …, b_52` of the moduli space.
pub const THEOREM_BETTI_EVEN: [u64; 27] = [
    1, 2, 6, 13, 26, 45, 68, 87, 100, 107, 111, 112, 113, 113, 113, 112, 111, 107, 100, 87, 68, 45,
    26, 13, 6, 2, 1,
];

pub const THEOREM_EULER: u64 = 1695;
pub const THEOREM_POINTS: usize = 1329;
pub const THEOREM_LINES: usize = 174;
pub const THEOREM_SURFACES: usize = 3;
pub const MODULI_DIMENSION: usize = 26;

/// The full Betti vector `b_0 … b_52`, odd entries zero.
pub fn theorem_betti() -> Vec<u64> {
    let mut b = vec![0u64; 2 * MODULI_DIMENSION + 1];
    for (p, &v) in THEOREM_BETTI_EVEN.iter().enumerate() {
        b[2 * p] = v;
    }
    b
}

/// One printed row of Tables 1–4.
#[derive(Debug, Clone, Copy)]
pub struct GoldenRow {
    pub table: u8,
    pub family: Family,
    /// The linear forms `l` or `(l1, l2)`.
    pub ls: &'static [&'static str],
    /// The quadratic forms `q`, `(q1, q2)` or `(q1, q2, q3)`.
    pub qs: &'static [&'static str],
    /// Equation-of-support column, as the complement of the support in `Σ^5`.
    pub support_complement: &'static [&'static str],
    pub affine_lines: &'static [&'static str],
    /// Limit-sheaves column. In Table 4 the entries are printed divided by `l`.
    pub limits: &'static [&'static str],
}

fn parse_all(items: &[&str]) -> Vec<Character> {
    items
        .iter()
        .map(|s| Character::parse_monomial(s).expect("golden data holds valid monomials"))
        .collect()
}

impl GoldenRow {
    pub fn ls(&self) -> Vec<Character> {
        parse_all(self.ls)
    }

    pub fn qs(&self) -> Vec<Character> {
        parse_all(self.qs)
    }

    pub fn support_complement(&self) -> WeightMultiset {
        parse_all(self.support_complement).into_iter().collect()
    }

    pub fn affine_lines(&self) -> WeightMultiset {
        parse_all(self.affine_lines).into_iter().collect()
    }

    /// The limit column as printed.
    pub fn limits_as_printed(&self) -> WeightMultiset {
        parse_all(self.limits).into_iter().collect()
    }

    /// The limit column as quintic monomials `d` (Table 4 entries are multiplied by `l`).
    pub fn limit_quintics(&self) -> WeightMultiset {
        let offset = if self.table == 4 {
            self.ls()[0]
        } else {
            Character::ZERO
        };
        self.limits_as_printed().shift(offset)
    }

    /// Short row label, e.g. `(XY,XZ,YZ) (X,Y)`.
    pub fn label(&self) -> String {
        let qs = self.qs.join(",");
        let ls = self.ls.join(",");
        match self.table {
            1 => format!("({qs})"),
            2 => format!("({qs}) ({ls})"),
            3 => format!("({qs})"),
            _ => format!("l={ls} q={qs}"),
        }
    }
}

macro_rules! row {
    ($t:expr, $fam:ident, [$($l:expr),*], [$($q:expr),*], [$($c:expr),*], [$($a:expr),*], [$($m:expr),*]) => {
        GoldenRow {
            table: $t,
            family: Family::$fam,
            ls: &[$($l),*],
            qs: &[$($q),*],
            support_complement: &[$($c),*],
            affine_lines: &[$($a),*],
            limits: &[$($m),*],
        }
    };
}

/// Fixed points `δ(X, Y, q1, q2, d)` in the stratum `M01`.
pub const TABLE_1: &[GoldenRow] = &[
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["X2", "Y2"],
        ["Z5", "Z4X", "Z4Y", "Z3X2", "Z3XY", "Z3Y2"],
        ["X2Y2Z"],
        []
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["X2", "Z2"],
        ["Y5", "Z5", "XY4", "Y4Z", "XY3Z"],
        [],
        ["X3YZ"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["Z2", "XY"],
        ["X5", "Y5", "Z5", "X4Z", "Y4Z"],
        [],
        ["X2Y2Z"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["X2", "YZ"],
        ["Y5", "Z5", "XY4", "XZ4", "X2Z3", "YZ4"],
        ["X2YZ2"],
        ["X3Y2"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["X2", "XY"],
        ["Y5", "Z5", "XZ4", "X2Z3", "YZ4", "Y2Z3", "Y3Z2", "Y4Z", "XYZ3"],
        ["X2YZ2", "X3YZ", "X2Y2Z", "X2Y3"],
        []
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["XZ", "YZ"],
        ["X5", "Y5", "Z5", "XZ4", "YZ4", "XY4", "X2Y3", "X3Y2", "X4Y"],
        ["XYZ3", "XY3Z", "X2Y2Z", "X3YZ"],
        ["X2Y2Z"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["X2", "XZ"],
        ["Y5", "Z5", "XY4", "XZ4", "YZ4", "Y2Z3", "Y3Z2", "Y4Z"],
        ["X3Z2", "X2YZ2", "X2Y2Z"],
        ["X4Y"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["XY", "YZ"],
        ["X5", "Y5", "Z5", "YZ4", "XZ4", "X2Z3", "X3Z2", "X4Z"],
        ["XY2Z2", "X2YZ2", "X3YZ"],
        ["X2Y3"]
    ),
    row!(
        1,
        Delta,
        ["X", "Y"],
        ["XZ", "Z2"],
        ["X5", "Y5", "Z5", "Y4Z", "XY4", "X2Y3", "X3Y2", "X4Y"],
        ["XY2Z2", "X2YZ2", "X3Z2"],
        ["X2YZ2"]
    ),
];

/// Fixed points in `M1`.
pub const TABLE_2: &[GoldenRow] = &[
    row!(
        2,
        Epsilon,
        ["X", "Y"],
        ["XY", "XZ", "YZ"],
        ["X5", "Y5", "Z5", "XZ4", "YZ4"],
        ["XYZ3"],
        ["X2Y2Z"]
    ),
    row!(
        2,
        Epsilon,
        ["X", "Z"],
        ["XY", "XZ", "YZ"],
        ["X5", "Y5", "Z5", "XY4", "Y4Z"],
        ["XY3Z"],
        ["X2YZ2"]
    ),
    row!(
        2,
        Epsilon,
        ["Y", "Z"],
        ["XY", "XZ", "YZ"],
        ["X5", "Y5", "Z5", "X4Y", "X4Z"],
        ["X3YZ"],
        ["XY2Z2"]
    ),
    row!(
        2,
        Zeta,
        ["X", "Y"],
        ["X2", "XY", "YZ"],
        ["Y5", "Z5", "XZ4", "X2Z3", "YZ4"],
        ["X2YZ2"],
        ["X3Y2", "X2Y2Z"]
    ),
    row!(
        2,
        Zeta,
        ["X", "Z"],
        ["X2", "XY", "YZ"],
        ["Y5", "Z5", "XY4", "XZ4", "Y4Z"],
        ["XY3Z"],
        ["X3YZ", "X2YZ2"]
    ),
    row!(
        2,
        Zeta,
        ["Y", "Z"],
        ["X2", "XY", "YZ"],
        ["X5", "Y5", "Z5", "XZ4"],
        [],
        ["X2Y2Z", "XY2Z2"]
    ),
    row!(
        2,
        Eta,
        ["X", "Y"],
        ["X2", "XY", "Y2"],
        ["Z5", "Z4X", "Z4Y", "Z3X2", "Z3XY", "Z3Y2"],
        ["XY2Z2", "X2YZ2"],
        ["X3Y2", "X2Y3"]
    ),
    row!(
        2,
        Eta,
        ["X", "Z"],
        ["X2", "XY", "Y2"],
        ["Y5", "Z5", "XZ4", "YZ4"],
        [],
        ["X2Y2Z", "X3YZ"]
    ),
    row!(
        2,
        Eta,
        ["Y", "Z"],
        ["X2", "XY", "Y2"],
        ["X5", "Z5", "XZ4", "YZ4"],
        [],
        ["X2Y2Z", "XY3Z"]
    ),
    row!(
        2,
        Theta,
        ["X", "Y"],
        ["X2", "XY", "XZ"],
        ["Y5", "Z5", "XZ4", "YZ4", "Y4Z", "Y2Z3", "Y3Z2"],
        ["X2YZ2", "XY3Z", "XY2Z2"],
        ["X3YZ", "X3Y2"]
    ),
    row!(
        2,
        Theta,
        ["X", "Z"],
        ["X2", "XY", "XZ"],
        ["Y5", "Z5", "XY4", "YZ4", "Y4Z", "Y2Z3", "Y3Z2"],
        ["X2Y2Z", "XYZ3", "XY2Z2"],
        ["X3YZ", "X3Z2"]
    ),
    row!(
        2,
        Theta,
        ["Y", "Z"],
        ["X2", "XY", "XZ"],
        ["X5", "Y5", "Z5", "YZ4", "Y2Z3", "Y3Z2", "Y4Z"],
        ["XYZ3", "XY2Z2", "XY3Z"],
        ["X2Y2Z", "X2YZ2"]
    ),
];

/// Fixed points in `M2`.
pub const TABLE_3: &[GoldenRow] = &[
    row!(
        3,
        Iota,
        [],
        ["XY", "XZ", "YZ"],
        ["X5", "Y5", "Z5"],
        [],
        ["X2Y2Z", "XY2Z2", "X2YZ2"]
    ),
    row!(
        3,
        Kappa,
        [],
        ["X2", "XY", "YZ"],
        ["Y5", "Z5", "XZ4"],
        [],
        ["X2Y2Z", "XY2Z2", "X3YZ"]
    ),
    row!(
        3,
        Lambda,
        [],
        ["X2", "XY", "Y2"],
        ["Z5", "Z4X", "Z4Y"],
        [],
        ["X2Y2Z", "XY3Z", "X3YZ"]
    ),
    row!(
        3,
        Mu,
        [],
        ["X2", "XY", "XZ"],
        ["Y5", "Y4Z", "Y3Z2", "Y2Z3", "YZ4", "Z5"],
        ["XYZ3", "XY2Z2", "XY3Z"],
        ["X2Y2Z", "X2YZ2", "X3YZ"]
    ),
];

/// Fixed points in `M3`.
pub const TABLE_4: &[GoldenRow] = &[
    row!(
        4,
        Nu,
        ["X"],
        ["Y2"],
        ["Z5", "YZ4"],
        [],
        ["Y3Z", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["X"],
        ["Z2"],
        ["Y5", "Y4Z"],
        [],
        ["YZ3", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["X"],
        ["YZ"],
        ["Y5", "Z5"],
        [],
        ["Y2Z2", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Y"],
        ["X2"],
        ["Z5", "XZ4"],
        [],
        ["X3Z", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Y"],
        ["Z2"],
        ["X5", "X4Z"],
        [],
        ["XZ3", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Y"],
        ["XZ"],
        ["X5", "Z5"],
        [],
        ["X2Z2", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Z"],
        ["Y2"],
        ["X5", "X4Y"],
        [],
        ["XY3", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Z"],
        ["X2"],
        ["Y5", "XY4"],
        [],
        ["X3Y", "X2YZ", "XY2Z", "XYZ2"]
    ),
    row!(
        4,
        Nu,
        ["Z"],
        ["XY"],
        ["X5", "Y5"],
        [],
        ["X2Y2", "X2YZ", "XY2Z", "XYZ2"]
    ),
];

pub fn table(n: u8) -> Option<&'static [GoldenRow]> {
    match n {
        1 => Some(TABLE_1),
        2 => Some(TABLE_2),
        3 => Some(TABLE_3),
        4 => Some(TABLE_4),
        _ => None,
    }
}

pub fn all_rows() -> impl Iterator<Item = &'static GoldenRow> {
    TABLE_1.iter().chain(TABLE_2).chain(TABLE_3).chain(TABLE_4)
}
