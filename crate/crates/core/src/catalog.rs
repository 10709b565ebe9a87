//! The torus-fixed locus, one [`FixedComponent`] per irreducible component.
//!
//! Each [`CatalogRow`] is a base parameter tuple taken from the reference
//! computation (the `(l1, l2) = (X, Y)` representative for `δ`, `l = X` for
//! `ν`, …). Its permuted copies are produced by fanning out over an
//! [`OrbitStrategy`]: a component with orientation `p` is the image of the
//! base tuple under the variable permutation `p`, and it is evaluated against
//! `λ ∘ p` instead of materialising permuted weights.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden::{self, GoldenRow};
use crate::weights::{
    ideal_degree5, msub, sigma, Character, OneParamSubgroup, Permutation, WeightMultiset,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    M0,
    M1,
    M2,
    M3,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [Stratum::M0, Stratum::M1, Stratum::M2, Stratum::M3];

    /// Number of `(u, v)` diagonal entries of the torus lift.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Stratum::M0 | Stratum::M2 => (3, 3),
            Stratum::M1 => (4, 4),
            Stratum::M3 => (2, 2),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Stratum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "M0" => Ok(Stratum::M0),
            "M1" => Ok(Stratum::M1),
            "M2" => Ok(Stratum::M2),
            "M3" => Ok(Stratum::M3),
            _ => Err(Error::Parse(format!("unknown stratum {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Zeta,
    Eta,
    Theta,
    Iota,
    Kappa,
    Lambda,
    Mu,
    Nu,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Alpha,
        Family::Beta,
        Family::Gamma,
        Family::Delta,
        Family::Epsilon,
        Family::Zeta,
        Family::Eta,
        Family::Theta,
        Family::Iota,
        Family::Kappa,
        Family::Lambda,
        Family::Mu,
        Family::Nu,
    ];

    pub fn stratum(self) -> Stratum {
        use Family::*;
        match self {
            Alpha | Beta | Gamma | Delta => Stratum::M0,
            Epsilon | Zeta | Eta | Theta => Stratum::M1,
            Iota | Kappa | Lambda | Mu => Stratum::M2,
            Nu => Stratum::M3,
        }
    }

    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            Alpha => "alpha",
            Beta => "beta",
            Gamma => "gamma",
            Delta => "delta",
            Epsilon => "epsilon",
            Zeta => "zeta",
            Eta => "eta",
            Theta => "theta",
            Iota => "iota",
            Kappa => "kappa",
            Lambda => "lambda",
            Mu => "mu",
            Nu => "nu",
        }
    }

    /// Names of the `ls` and `qs` parameters, in order.
    fn param_names(self) -> (&'static [&'static str], &'static [&'static str]) {
        use Family::*;
        match self {
            Alpha => (&[], &["q1", "q2"]),
            Beta => (&["l"], &["q"]),
            Gamma => (&[], &[]),
            Delta => (&["l1", "l2"], &["q1", "q2"]),
            Epsilon | Zeta | Eta | Theta => (&["l1", "l2"], &["q1", "q2", "q3"]),
            Iota | Kappa | Lambda | Mu => (&[], &["q1", "q2", "q3"]),
            Nu => (&["l"], &["q"]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let s = s.trim_end_matches('_');
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Point,
    Line,
    Surface,
}

impl Kind {
    pub fn dimension(self) -> usize {
        match self {
            Kind::Point => 0,
            Kind::Line => 1,
            Kind::Surface => 2,
        }
    }

    /// Topological Euler characteristic of a component of this kind.
    pub fn euler(self) -> u64 {
        match self {
            Kind::Point => 1,
            Kind::Line => 2,
            Kind::Surface => 6,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Surface => "surface",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "point" => Ok(Kind::Point),
            "line" => Ok(Kind::Line),
            "surface" => Ok(Kind::Surface),
            _ => Err(Error::Parse(format!("unknown kind {s:?}"))),
        }
    }
}

/// Which permuted copies of a base tuple are distinct components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitStrategy {
    /// One evaluation at `λ`; used when the parameter set is already permutation-closed.
    Single,
    /// `λ`, `λ∘(x z)`, `λ∘(y z)`: evaluation vectors `(0,1,7), (7,1,0), (0,7,1)`.
    Orbit3,
    /// `λ`, `λ∘(x y)`, `λ∘(x z)`: evaluation vectors `(0,1,7), (1,0,7), (7,1,0)`.
    Orbit3Alt,
    /// All six permutations.
    Orbit6,
}

impl OrbitStrategy {
    pub fn permutations(self) -> &'static [Permutation] {
        const SINGLE: [Permutation; 1] = [Permutation::IDENTITY];
        const ORBIT_3: [Permutation; 3] = [
            Permutation::IDENTITY,
            Permutation::SWAP_XZ,
            Permutation::SWAP_YZ,
        ];
        const ORBIT_3_ALT: [Permutation; 3] = [
            Permutation::IDENTITY,
            Permutation::SWAP_XY,
            Permutation::SWAP_XZ,
        ];
        match self {
            OrbitStrategy::Single => &SINGLE,
            OrbitStrategy::Orbit3 => &ORBIT_3,
            OrbitStrategy::Orbit3Alt => &ORBIT_3_ALT,
            OrbitStrategy::Orbit6 => &Permutation::ALL,
        }
    }

    pub fn len(self) -> usize {
        self.permutations().len()
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

/// A named defining monomial of a component (`l1`, `q2`, `d`, …).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Param {
    pub name: &'static str,
    pub value: Character,
}

/// One irreducible component of the fixed locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComponent {
    pub id: String,
    pub stratum: Stratum,
    pub family: Family,
    pub kind: Kind,
    /// Base-representative parameters (before applying `orientation`).
    pub params: Vec<Param>,
    pub u_list: Vec<Character>,
    pub v_list: Vec<Character>,
    /// Tangent weights of the stabiliser; nonempty only in `M1`.
    pub stabilizer_weights: WeightMultiset,
    /// Normal-space weights added back to the stratum tangent; `M2` and `M3` only.
    pub normal_weights: WeightMultiset,
    /// The variable permutation taking the base tuple to this component.
    pub orientation: Permutation,
    pub orbit_index: usize,
}

impl FixedComponent {
    pub fn dimension(&self) -> usize {
        self.kind.dimension()
    }

    /// The subgroup to pair the base weights with, so that the result equals
    /// pairing this component's weights with `lambda`.
    pub fn eval_vector(&self, lambda: OneParamSubgroup) -> OneParamSubgroup {
        lambda.pullback(self.orientation)
    }

    pub fn eval_vectors(&self) -> Vec<OneParamSubgroup> {
        vec![self.eval_vector(OneParamSubgroup::DEFAULT)]
    }

    pub fn param(&self, name: &str) -> Option<Character> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }

    /// Parameters of this component itself, i.e. the base parameters permuted.
    pub fn actual_params(&self) -> Vec<Param> {
        self.params
            .iter()
            .map(|p| Param {
                name: p.name,
                value: self.orientation.apply(p.value),
            })
            .collect()
    }

    pub fn to_record(&self) -> ComponentRecord {
        fn triples(cs: impl IntoIterator<Item = Character>) -> Vec<[i64; 3]> {
            cs.into_iter().map(Character::coords).collect()
        }
        ComponentRecord {
            id: self.id.clone(),
            stratum: self.stratum,
            family: self.family,
            kind: self.kind.to_string(),
            params: self
                .params
                .iter()
                .map(|p| (p.name.to_string(), p.value.coords()))
                .collect(),
            u_list: triples(self.u_list.iter().copied()),
            v_list: triples(self.v_list.iter().copied()),
            stabilizer_weights: triples(self.stabilizer_weights.iter_expanded()),
            normal_weights: triples(self.normal_weights.iter_expanded()),
            eval_vector: self.eval_vector(OneParamSubgroup::DEFAULT).entries(),
        }
    }
}

/// Serialised form of a component (one JSON line per component).
#[derive(Debug, Clone, Serialize)]
pub struct ComponentRecord {
    pub id: String,
    pub stratum: Stratum,
    pub family: Family,
    pub kind: String,
    pub params: BTreeMap<String, [i64; 3]>,
    pub u_list: Vec<[i64; 3]>,
    pub v_list: Vec<[i64; 3]>,
    pub stabilizer_weights: Vec<[i64; 3]>,
    pub normal_weights: Vec<[i64; 3]>,
    pub eval_vector: [i64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CensusCounts {
    pub points: usize,
    pub lines: usize,
    pub surfaces: usize,
}

impl CensusCounts {
    pub fn total(&self) -> usize {
        self.points + self.lines + self.surfaces
    }
}

/// The torus lift data `(u, v)` together with the stratum corrections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftData {
    pub u: Vec<Character>,
    pub v: Vec<Character>,
    pub stabilizer: WeightMultiset,
    pub normal: WeightMultiset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowBody {
    /// A single component (no `d` parameter).
    Fixed { kind: Kind },
    /// A family indexed by quintic monomials `d` in an ideal closure.
    Quintic {
        /// Monomials removed from the support before enumerating points.
        exclusions: Vec<Character>,
        /// Monomials giving fixed lines (`P^1` components).
        lines: Vec<Character>,
        line_orbit: OrbitStrategy,
    },
}

/// A base parameter tuple of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub family: Family,
    pub ls: Vec<Character>,
    pub qs: Vec<Character>,
    /// Orbit of the fixed component, or of the point components of a quintic row.
    pub orbit: OrbitStrategy,
    pub body: RowBody,
}

fn m(s: &str) -> Character {
    Character::parse_monomial(s).expect("catalog data holds valid monomials")
}

fn ms(items: &[&str]) -> Vec<Character> {
    items.iter().map(|s| m(s)).collect()
}

impl CatalogRow {
    fn fixed(family: Family, ls: &[&str], qs: &[&str], kind: Kind, orbit: OrbitStrategy) -> Self {
        CatalogRow {
            family,
            ls: ms(ls),
            qs: ms(qs),
            orbit,
            body: RowBody::Fixed { kind },
        }
    }

    fn quintic(
        family: Family,
        ls: &[&str],
        qs: &[&str],
        exclusions: &[&str],
        lines: &[&str],
        orbit: OrbitStrategy,
        line_orbit: OrbitStrategy,
    ) -> Self {
        CatalogRow {
            family,
            ls: ms(ls),
            qs: ms(qs),
            orbit,
            body: RowBody::Quintic {
                exclusions: ms(exclusions),
                lines: ms(lines),
                line_orbit,
            },
        }
    }

    pub fn stratum(&self) -> Stratum {
        self.family.stratum()
    }

    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.ls.iter().map(|c| c.to_monomial()).collect();
        parts.extend(self.qs.iter().map(|c| c.to_monomial()));
        format!("{}({})", self.family, parts.join(","))
    }

    /// Monomial generators of the support ideal, all of one degree.
    pub fn support_generators(&self) -> (WeightMultiset, i64) {
        support_generators(self.family, &self.ls, &self.qs)
    }

    /// The quintic monomials `d` admissible as support equations.
    pub fn support(&self) -> Result<WeightMultiset> {
        let (gens, degree) = self.support_generators();
        ideal_degree5(&gens, degree)
    }

    pub fn params(&self, d: Option<Character>) -> Vec<Param> {
        let (lnames, qnames) = self.family.param_names();
        let mut out: Vec<Param> = lnames
            .iter()
            .zip(&self.ls)
            .chain(qnames.iter().zip(&self.qs))
            .map(|(&name, &value)| Param { name, value })
            .collect();
        if let Some(d) = d {
            out.push(Param {
                name: "d",
                value: d,
            });
        }
        out
    }

    pub fn lift(&self, d: Option<Character>) -> LiftData {
        lift_data(
            self.family,
            &self.ls,
            &self.qs,
            d.unwrap_or(Character::ZERO),
        )
    }

    /// Builds the component for a given `d` (ignored for fixed rows), kind and orbit slot.
    ///
    /// Works for any `d`, including monomials excluded from the catalog, which is
    /// what the limit classification needs.
    pub fn candidate(
        &self,
        d: Option<Character>,
        kind: Kind,
        orientation: Permutation,
        orbit_index: usize,
    ) -> FixedComponent {
        let params = self.params(d);
        let lift = self.lift(d);
        let mut id = self.family.name().to_string();
        if !params.is_empty() {
            id.push(':');
            let names: Vec<String> = params.iter().map(|p| p.value.to_monomial()).collect();
            id.push_str(&names.join(","));
        }
        id.push_str(&format!(":{orbit_index}"));
        FixedComponent {
            id,
            stratum: self.stratum(),
            family: self.family,
            kind,
            params,
            u_list: lift.u,
            v_list: lift.v,
            stabilizer_weights: lift.stabilizer,
            normal_weights: lift.normal,
            orientation,
            orbit_index,
        }
    }

    /// Point monomials: support minus exclusions.
    pub fn point_domain(&self) -> Result<WeightMultiset> {
        match &self.body {
            RowBody::Fixed { .. } => Ok(WeightMultiset::new()),
            RowBody::Quintic { exclusions, .. } => Ok(msub(
                &self.support()?,
                &exclusions.iter().copied().collect(),
            )),
        }
    }

    pub fn line_domain(&self) -> WeightMultiset {
        match &self.body {
            RowBody::Fixed { .. } => WeightMultiset::new(),
            RowBody::Quintic { lines, .. } => lines.iter().copied().collect(),
        }
    }

    /// All components of this row, in canonical order.
    pub fn components(&self) -> Result<Vec<FixedComponent>> {
        let fan = |d: Option<Character>, kind: Kind, orbit: OrbitStrategy| {
            orbit
                .permutations()
                .iter()
                .enumerate()
                .map(move |(idx, &p)| self.candidate(d, kind, p, idx))
        };
        let mut out = Vec::new();
        match &self.body {
            RowBody::Fixed { kind } => out.extend(fan(None, *kind, self.orbit)),
            RowBody::Quintic { line_orbit, .. } => {
                for d in self.point_domain()?.iter_expanded() {
                    out.extend(fan(Some(d), Kind::Point, self.orbit));
                }
                for d in self.line_domain().iter_expanded() {
                    out.extend(fan(Some(d), Kind::Line, *line_orbit));
                }
            }
        }
        Ok(out)
    }

    /// The printed table row this base tuple appears in, if any.
    pub fn golden_row(&self) -> Option<&'static GoldenRow> {
        golden::all_rows()
            .find(|g| g.family == self.family && g.ls() == self.ls && same_set(&g.qs(), &self.qs))
    }
}

fn same_set(a: &[Character], b: &[Character]) -> bool {
    let a: WeightMultiset = a.iter().copied().collect();
    let b: WeightMultiset = b.iter().copied().collect();
    a.support() == b.support()
}

/// Support-ideal generators for a family with the given linear and quadratic parameters.
pub fn support_generators(
    family: Family,
    ls: &[Character],
    qs: &[Character],
) -> (WeightMultiset, i64) {
    match family.stratum() {
        Stratum::M0 | Stratum::M1 => {
            let gens = ls
                .iter()
                .flat_map(|&l| qs.iter().map(move |&q| l + q))
                .collect();
            (gens, 3)
        }
        Stratum::M2 => (qs.iter().copied().collect(), 2),
        Stratum::M3 => {
            // (l, q) lifted to degree 3
            let mut gens = sigma::monomials(2).shift(ls[0]);
            gens.extend_from(&sigma::monomials(1).shift(qs[0]));
            (gens.support(), 3)
        }
    }
}

/// Diagonal torus lift `(u, v)` and correction lists for a base tuple.
pub fn lift_data(family: Family, ls: &[Character], qs: &[Character], d: Character) -> LiftData {
    use Family::*;
    let (x, y, z) = (Character::X, Character::Y, Character::Z);
    let o = Character::ZERO;
    let xyz = x + y + z;
    let set = |cs: &[Character]| cs.iter().copied().collect::<WeightMultiset>();
    let plain = |u: Vec<Character>, v: Vec<Character>| LiftData {
        u,
        v,
        stabilizer: WeightMultiset::new(),
        normal: WeightMultiset::new(),
    };
    match family {
        Alpha => plain(vec![qs[0] - x, qs[1] - y, o], vec![x, y, z]),
        Beta => plain(vec![qs[0] - x, ls[0], o], vec![x, y, z]),
        Gamma => plain(vec![x, y, o], vec![x, y, z]),
        Delta => {
            let (l1, l2, q1, q2) = (ls[0], ls[1], qs[0], qs[1]);
            plain(
                vec![d - l1 - l2 - q2, d - l1 - l2 - q1, o],
                vec![l1, l2, q1 + q2 + l1 + l2 - d],
            )
        }
        Epsilon | Zeta | Eta | Theta => {
            let (u3, u4, tail) = match family {
                Epsilon => (xyz, xyz, [m("YZ"), m("XZ"), m("XY")]),
                Zeta => (m("X2Y"), xyz, [m("X2"), m("YZ"), m("XY")]),
                Eta => (m("XY2"), m("X2Y"), [m("Y2"), m("X2"), m("XY")]),
                _ => (m("X2Y"), m("X2Z"), [m("XY"), m("XZ"), m("X2")]),
            };
            let (l1, l2) = (ls[0], ls[1]);
            let v1 = l1 + l2 - d;
            LiftData {
                u: vec![d - l2, d - l1, u3, u4],
                v: vec![v1, -tail[0], -tail[1], -tail[2]],
                stabilizer: set(&[u3 + v1, u4 + v1]),
                normal: WeightMultiset::new(),
            }
        }
        Iota | Kappa | Lambda | Mu => {
            let (u, v) = match family {
                Iota => (vec![x, y, z], vec![o, o, d - xyz]),
                Kappa => (vec![y - x, x - z, o], vec![x, z, d - x - y]),
                Lambda => (vec![x - y, y - x, o], vec![y, x, d - x - y]),
                _ => (vec![x - y, x - z, o], vec![y, z, d - x - x]),
            };
            let normal = set(&[u[0] + v[2] - xyz, u[1] + v[2] - xyz, u[2] + v[2] - xyz]);
            LiftData {
                u,
                v,
                stabilizer: WeightMultiset::new(),
                normal,
            }
        }
        Nu => {
            let (l, q) = (ls[0], qs[0]);
            let u1 = d - q - l;
            LiftData {
                u: vec![u1, o],
                v: vec![l, q],
                stabilizer: WeightMultiset::new(),
                normal: set(&[
                    u1 + l - xyz,
                    u1 + q - xyz - x,
                    u1 + q - xyz - y,
                    u1 + q - xyz - z,
                ]),
            }
        }
    }
}

/// `(qs, exclusions, lines, orbit)` of a `δ` row with `(l1, l2) = (X, Y)`.
type DeltaSpec = (
    &'static [&'static str],
    &'static [&'static str],
    &'static [&'static str],
    OrbitStrategy,
);
/// `(family, ls, qs, exclusions, lines, orbit)` of an `M1` row.
type M1Spec = (
    Family,
    [&'static str; 2],
    [&'static str; 3],
    &'static [&'static str],
    &'static [&'static str],
    OrbitStrategy,
);
/// `(family, qs, exclusions, lines, orbit)` of an `M2` row.
type M2Spec = (
    Family,
    [&'static str; 3],
    &'static [&'static str],
    &'static [&'static str],
    OrbitStrategy,
);

/// Every base tuple, in the order of the reference computation.
pub fn rows() -> Vec<CatalogRow> {
    use Family::*;
    use OrbitStrategy::*;
    let mut rows = Vec::new();

    for q1 in ["Y2", "Z2", "YZ"] {
        for q2 in ["X2", "Z2", "XZ"] {
            rows.push(CatalogRow::fixed(
                Alpha,
                &[],
                &[q1, q2],
                Kind::Point,
                Orbit3,
            ));
        }
    }
    rows.push(CatalogRow::fixed(
        Alpha,
        &[],
        &["X2", "XY"],
        Kind::Point,
        Orbit3Alt,
    ));
    for q in ["Y2", "Z2", "YZ"] {
        for l in ["X", "Y", "Z"] {
            rows.push(CatalogRow::fixed(Beta, &[l], &[q], Kind::Line, Orbit3Alt));
        }
    }
    rows.push(CatalogRow::fixed(Gamma, &[], &[], Kind::Surface, Orbit3));

    let xy = ["X", "Y"];
    let delta: [DeltaSpec; 9] = [
        (&["X2", "Y2"], &["X2Y2Z"], &["X2Y2Z"], Orbit3),
        (&["X2", "Z2"], &["X3YZ"], &[], Orbit6),
        (&["Z2", "XY"], &["X2Y2Z"], &[], Orbit3),
        (&["X2", "YZ"], &["X2YZ2", "X3Y2"], &["X2YZ2"], Orbit6),
        (
            &["X2", "XY"],
            &["X2YZ2", "X3YZ", "X2Y2Z", "X2Y3"],
            &["X2YZ2", "X3YZ", "X2Y2Z", "X2Y3"],
            Orbit6,
        ),
        (
            &["XZ", "YZ"],
            &["XYZ3", "XY3Z", "X2Y2Z", "X3YZ"],
            &["XYZ3", "XY3Z", "X3YZ"],
            Orbit3,
        ),
        (
            &["X2", "XZ"],
            &["X3Z2", "X2YZ2", "X2Y2Z", "X4Y"],
            &["X3Z2", "X2YZ2", "X2Y2Z"],
            Orbit6,
        ),
        (
            &["XY", "YZ"],
            &["XY2Z2", "X2YZ2", "X2Y3", "X3YZ"],
            &["XY2Z2", "X2YZ2", "X3YZ"],
            Orbit6,
        ),
        (
            &["XZ", "Z2"],
            &["XY2Z2", "X2YZ2", "X3Z2"],
            &["XY2Z2", "X3Z2"],
            Orbit6,
        ),
    ];
    for (qs, excl, lines, orbit) in delta {
        rows.push(CatalogRow::quintic(
            Delta, &xy, qs, excl, lines, orbit, orbit,
        ));
    }

    let m1: [M1Spec; 8] = [
        (
            Epsilon,
            ["X", "Y"],
            ["XY", "XZ", "YZ"],
            &["X2Y2Z", "XYZ3"],
            &["XYZ3"],
            Orbit3,
        ),
        (
            Zeta,
            ["X", "Y"],
            ["X2", "XY", "YZ"],
            &["X3Y2", "X2Y2Z", "X2YZ2"],
            &["X2YZ2"],
            Orbit6,
        ),
        (
            Zeta,
            ["X", "Z"],
            ["X2", "XY", "YZ"],
            &["X3YZ", "X2YZ2", "XY3Z"],
            &["XY3Z"],
            Orbit6,
        ),
        (
            Zeta,
            ["Y", "Z"],
            ["X2", "XY", "YZ"],
            &["X2Y2Z", "XY2Z2"],
            &[],
            Orbit6,
        ),
        (
            Eta,
            ["X", "Y"],
            ["X2", "XY", "Y2"],
            &["X3Y2", "X2Y3", "XY2Z2", "X2YZ2"],
            &["XY2Z2", "X2YZ2"],
            Orbit3,
        ),
        (
            Eta,
            ["X", "Z"],
            ["X2", "XY", "Y2"],
            &["X2Y2Z", "X3YZ"],
            &[],
            Orbit6,
        ),
        (
            Theta,
            ["X", "Y"],
            ["X2", "XY", "XZ"],
            &["X3YZ", "X3Y2", "X2YZ2", "XY3Z", "XY2Z2"],
            &["X2YZ2", "XY3Z", "XY2Z2"],
            Orbit6,
        ),
        (
            Theta,
            ["Y", "Z"],
            ["X2", "XY", "XZ"],
            &["X2Y2Z", "X2YZ2", "XYZ3", "XY2Z2", "XY3Z"],
            &["XYZ3", "XY2Z2", "XY3Z"],
            Orbit3Alt,
        ),
    ];
    for (family, ls, qs, excl, lines, orbit) in m1 {
        rows.push(CatalogRow::quintic(
            family, &ls, &qs, excl, lines, orbit, orbit,
        ));
    }

    let m2: [M2Spec; 4] = [
        (
            Iota,
            ["XY", "XZ", "YZ"],
            &["X2Y2Z", "XY2Z2", "X2YZ2"],
            &[],
            Single,
        ),
        (
            Kappa,
            ["X2", "XY", "YZ"],
            &["XY2Z2", "X3YZ", "X2Y2Z"],
            &[],
            Orbit6,
        ),
        (
            Lambda,
            ["X2", "XY", "Y2"],
            &["XY3Z", "X3YZ", "X2Y2Z"],
            &[],
            Orbit3,
        ),
        (
            Mu,
            ["X2", "XY", "XZ"],
            &["XYZ3", "XY2Z2", "XY3Z", "X2YZ2", "X2Y2Z", "X3YZ"],
            &["XYZ3", "XY2Z2", "XY3Z"],
            Orbit3Alt,
        ),
    ];
    for (family, qs, excl, lines, orbit) in m2 {
        rows.push(CatalogRow::quintic(
            family,
            &[],
            &qs,
            excl,
            lines,
            orbit,
            orbit,
        ));
    }

    rows.push(CatalogRow::quintic(
        Nu,
        &["X"],
        &["Y2"],
        &["XY3Z", "X2YZ2", "X3YZ", "X2Y2Z", "Z5", "YZ4"],
        &[],
        Orbit6,
        Orbit6,
    ));
    rows.push(CatalogRow::quintic(
        Nu,
        &["X"],
        &["YZ"],
        &["XY2Z2", "X2YZ2", "X3YZ", "X2Y2Z", "Y5", "Z5"],
        &[],
        Orbit3Alt,
        Orbit3Alt,
    ));
    rows
}

/// Cross-checks a quintic row against its printed table row.
///
/// The support must equal the ideal closure of the generators; the exclusions
/// must be exactly the affine-line and limit columns (for `M3`: the limit
/// column plus the quintics outside the support); the lines must be the
/// affine lines that are not limits.
pub fn check_row_integrity(row: &CatalogRow) -> Result<()> {
    let RowBody::Quintic {
        exclusions, lines, ..
    } = &row.body
    else {
        return Ok(());
    };
    let fail = |detail: String| Error::CatalogIntegrity {
        row: row.label(),
        detail,
    };
    let golden = row
        .golden_row()
        .ok_or_else(|| fail("no matching table row".to_string()))?;

    let support = row.support()?;
    let printed_support = msub(&sigma::quintics(), &golden.support_complement());
    if support != printed_support {
        return Err(fail(format!(
            "ideal closure has {} monomials, table support has {}",
            support.cardinality(),
            printed_support.cardinality()
        )));
    }

    let exclusions: WeightMultiset = exclusions.iter().copied().collect();
    let lines: WeightMultiset = lines.iter().copied().collect();
    let limits = golden.limit_quintics();
    let expected_exclusions = if golden.table == 4 {
        golden.support_complement().union(&limits).support()
    } else {
        golden.affine_lines().union(&limits).support()
    };
    if exclusions != expected_exclusions {
        return Err(fail(format!(
            "exclusions {} differ from table columns {}",
            monomial_list(&exclusions),
            monomial_list(&expected_exclusions)
        )));
    }
    let expected_lines = msub(&golden.affine_lines(), &limits);
    if lines != expected_lines {
        return Err(fail(format!(
            "lines {} differ from table affine lines {}",
            monomial_list(&lines),
            monomial_list(&expected_lines)
        )));
    }
    if !support.contains_multiset(&lines) {
        return Err(fail("a line monomial lies outside the support".to_string()));
    }
    Ok(())
}

/// `{A,B,C}` with monomial notation.
pub fn monomial_list(m: &WeightMultiset) -> String {
    let items: Vec<String> = m.iter_expanded().map(Character::to_monomial).collect();
    format!("{{{}}}", items.join(","))
}

/// Enumerates the components of the given rows after checking their integrity.
pub fn enumerate_rows(rows: &[CatalogRow]) -> Result<Vec<FixedComponent>> {
    let mut out = Vec::new();
    for row in rows {
        check_row_integrity(row)?;
        out.extend(row.components()?);
    }
    Ok(out)
}

/// The complete fixed locus.
pub fn enumerate_all() -> Result<Vec<FixedComponent>> {
    enumerate_rows(&rows())
}

pub fn census(components: &[FixedComponent]) -> CensusCounts {
    let mut c = CensusCounts::default();
    for comp in components {
        match comp.kind {
            Kind::Point => c.points += 1,
            Kind::Line => c.lines += 1,
            Kind::Surface => c.surfaces += 1,
        }
    }
    c
}

/// Predicate over components; unset fields match everything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    pub stratum: Option<Stratum>,
    pub family: Option<Family>,
    pub kind: Option<Kind>,
    /// Matches a named parameter of the component itself (after orientation).
    pub param: Option<(String, Character)>,
}

impl Filter {
    pub fn matches(&self, c: &FixedComponent) -> bool {
        self.stratum.is_none_or(|s| s == c.stratum)
            && self.family.is_none_or(|f| f == c.family)
            && self.kind.is_none_or(|k| k == c.kind)
            && self.param.as_ref().is_none_or(|(name, value)| {
                c.actual_params()
                    .iter()
                    .any(|p| p.name == name && p.value == *value)
            })
    }
}

pub fn filter<'a>(components: &'a [FixedComponent], by: &Filter) -> Vec<&'a FixedComponent> {
    components.iter().filter(|c| by.matches(c)).collect()
}

pub fn find<'a>(components: &'a [FixedComponent], id: &str) -> Result<&'a FixedComponent> {
    components
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownComponent(id.to_string()))
}
