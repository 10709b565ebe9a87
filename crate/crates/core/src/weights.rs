//! Character-lattice arithmetic.
//!
//! A [`Character`] `(i, j, k)` stands for `i·x + j·y + k·z` in the character
//! lattice of `(C*)^3`; a monomial `X^i Y^j Z^k` is identified with the same
//! triple. Weight lists are kept as [`WeightMultiset`]s, a sorted
//! character-to-multiplicity map, so that every dump is canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct Character {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl Character {
    /// The trivial character.
    pub const ZERO: Character = Character::new(0, 0, 0);
    pub const X: Character = Character::new(1, 0, 0);
    pub const Y: Character = Character::new(0, 1, 0);
    pub const Z: Character = Character::new(0, 0, 1);

    pub const fn new(i: i64, j: i64, k: i64) -> Self {
        Character { i, j, k }
    }

    pub const fn coords(self) -> [i64; 3] {
        [self.i, self.j, self.k]
    }

    pub const fn from_coords(c: [i64; 3]) -> Self {
        Character::new(c[0], c[1], c[2])
    }

    pub fn is_trivial(self) -> bool {
        self == Self::ZERO
    }

    /// Total degree `i + j + k`; zero exactly for characters of the quotient torus.
    pub fn degree(self) -> i64 {
        self.i + self.j + self.k
    }

    pub fn is_monomial(self) -> bool {
        self.i >= 0 && self.j >= 0 && self.k >= 0
    }

    pub fn max_abs_coord(self) -> i64 {
        self.i.abs().max(self.j.abs()).max(self.k.abs())
    }

    pub fn scale(self, n: i64) -> Self {
        Character::new(n * self.i, n * self.j, n * self.k)
    }

    /// Renders a monomial character as e.g. `X2Y2Z`; the constant monomial is `1`.
    ///
    /// Characters with negative exponents fall back to the `i,j,k` form.
    pub fn to_monomial(self) -> String {
        if !self.is_monomial() {
            return self.to_string();
        }
        if self.is_trivial() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (var, e) in ['X', 'Y', 'Z'].into_iter().zip(self.coords()) {
            match e {
                0 => {}
                1 => s.push(var),
                _ => {
                    s.push(var);
                    s.push_str(&e.to_string());
                }
            }
        }
        s
    }

    /// Parses a monomial such as `X2Y2Z`, `XYZ^3` or `1`. Case-insensitive.
    pub fn parse_monomial(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::ZERO);
        }
        let bad = || Error::Parse(format!("not a monomial: {s:?}"));
        let mut out = [0i64; 3];
        let mut chars = s.chars().peekable();
        if chars.peek().is_none() {
            return Err(bad());
        }
        while let Some(c) = chars.next() {
            let var = match c.to_ascii_uppercase() {
                'X' => 0,
                'Y' => 1,
                'Z' => 2,
                _ => return Err(bad()),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            out[var] += if digits.is_empty() {
                1
            } else {
                digits.parse::<i64>().map_err(|_| bad())?
            };
        }
        Ok(Self::from_coords(out))
    }

    /// Applies a permutation of the variables.
    pub fn permute(self, p: Permutation) -> Self {
        p.apply(self)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.i, self.j, self.k)
    }
}

impl FromStr for Character {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected i,j,k, got {s:?}")));
        }
        let mut c = [0i64; 3];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}")))?;
        }
        Ok(Self::from_coords(c))
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        Character::new(self.i + o.i, self.j + o.j, self.k + o.k)
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, o: Character) -> Character {
        Character::new(self.i - o.i, self.j - o.j, self.k - o.k)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character::new(-self.i, -self.j, -self.k)
    }
}

/// A permutation of the variables `x, y, z`: variable `t` is sent to `images[t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: [usize; 3],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { images: [0, 1, 2] };
    pub const SWAP_XY: Permutation = Permutation { images: [1, 0, 2] };
    pub const SWAP_XZ: Permutation = Permutation { images: [2, 1, 0] };
    pub const SWAP_YZ: Permutation = Permutation { images: [0, 2, 1] };
    /// `x -> y -> z -> x`
    pub const CYCLE: Permutation = Permutation { images: [1, 2, 0] };
    /// `x -> z -> y -> x`
    pub const CYCLE_INV: Permutation = Permutation { images: [2, 0, 1] };

    pub const ALL: [Permutation; 6] = [
        Self::IDENTITY,
        Self::SWAP_XY,
        Self::SWAP_XZ,
        Self::CYCLE,
        Self::SWAP_YZ,
        Self::CYCLE_INV,
    ];

    /// Returns `None` unless `images` is a permutation of `0..3`.
    pub fn new(images: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &t in &images {
            if t > 2 || seen[t] {
                return None;
            }
            seen[t] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(self) -> [usize; 3] {
        self.images
    }

    pub fn apply(self, c: Character) -> Character {
        let src = c.coords();
        let mut out = [0i64; 3];
        for t in 0..3 {
            out[self.images[t]] = src[t];
        }
        Character::from_coords(out)
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0usize; 3];
        for t in 0..3 {
            inv[self.images[t]] = t;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(t) = self(other(t))`
    pub fn compose(self, other: Permutation) -> Self {
        Permutation {
            images: other.images.map(|t| self.images[t]),
        }
    }
}

impl Default for Permutation {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// A one-parameter subgroup `t ↦ (t^n0, t^n1, t^n2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneParamSubgroup {
    pub n0: i64,
    pub n1: i64,
    pub n2: i64,
}

impl OneParamSubgroup {
    /// `λ(t) = (1, t, t^7)`.
    pub const DEFAULT: OneParamSubgroup = OneParamSubgroup::new(0, 1, 7);

    pub const fn new(n0: i64, n1: i64, n2: i64) -> Self {
        OneParamSubgroup { n0, n1, n2 }
    }

    pub fn entries(self) -> [i64; 3] {
        [self.n0, self.n1, self.n2]
    }

    pub fn pair(self, c: Character) -> i64 {
        self.n0 * c.i + self.n1 * c.j + self.n2 * c.k
    }

    /// The subgroup `λ ∘ p`, i.e. entries `(λ[p(0)], λ[p(1)], λ[p(2)])`.
    ///
    /// Pairing a character with `λ ∘ p` is the same as pairing `p(χ)` with `λ`.
    pub fn pullback(self, p: Permutation) -> Self {
        let e = self.entries();
        let im = p.images();
        OneParamSubgroup::new(e[im[0]], e[im[1]], e[im[2]])
    }
}

impl Default for OneParamSubgroup {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n0, self.n1, self.n2)
    }
}

impl FromStr for OneParamSubgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let c: Character = s
            .parse()
            .map_err(|_| Error::Parse(format!("expected n0,n1,n2, got {s:?}")))?;
        Ok(OneParamSubgroup::new(c.i, c.j, c.k))
    }
}

/// A finite multiset of characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Character, usize>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(c: Character) -> Self {
        let mut m = Self::new();
        m.insert(c);
        m
    }

    pub fn insert(&mut self, c: Character) {
        self.insert_n(c, 1);
    }

    pub fn insert_n(&mut self, c: Character, n: usize) {
        if n > 0 {
            *self.entries.entry(c).or_insert(0) += n;
        }
    }

    /// Removes one copy of `c`; returns whether it was present.
    pub fn remove_one(&mut self, c: Character) -> bool {
        match self.entries.get_mut(&c) {
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.entries.remove(&c);
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, c: Character) -> usize {
        self.entries.get(&c).copied().unwrap_or(0)
    }

    pub fn chi0_multiplicity(&self) -> usize {
        self.multiplicity(Character::ZERO)
    }

    pub fn contains(&self, c: Character) -> bool {
        self.entries.contains_key(&c)
    }

    pub fn cardinality(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct characters with their multiplicities, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Character, usize)> + '_ {
        self.entries.iter().map(|(&c, &n)| (c, n))
    }

    /// Every element, repeated according to multiplicity, in canonical order.
    pub fn iter_expanded(&self) -> impl Iterator<Item = Character> + '_ {
        self.entries
            .iter()
            .flat_map(|(&c, &n)| std::iter::repeat_n(c, n))
    }

    pub fn to_vec(&self) -> Vec<Character> {
        self.iter_expanded().collect()
    }

    /// Multiset union `self ⊎ other`.
    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn extend_from(&mut self, other: &WeightMultiset) {
        for (c, n) in other.iter() {
            self.insert_n(c, n);
        }
    }

    /// `{c + χ : χ ∈ self}`.
    pub fn shift(&self, c: Character) -> WeightMultiset {
        shift(c, self)
    }

    pub fn permute(&self, p: Permutation) -> WeightMultiset {
        permute(self, p)
    }

    /// Whether every element of `other` occurs here with at least its multiplicity.
    pub fn contains_multiset(&self, other: &WeightMultiset) -> bool {
        other.iter().all(|(c, n)| self.multiplicity(c) >= n)
    }

    /// The support as a set (all multiplicities 1).
    pub fn support(&self) -> WeightMultiset {
        self.entries.keys().copied().collect()
    }

    /// Multiplicity-aware intersection.
    pub fn intersection(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (c, n) in self.iter() {
            out.insert_n(c, n.min(other.multiplicity(c)));
        }
        out
    }

    /// Canonical text form: one `i,j,k xM` line per distinct character.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::new();
        for (c, n) in self.iter() {
            s.push_str(&format!("{c} x{n}\n"));
        }
        s
    }

    /// Parses the canonical text form; blank lines and `#` comments are skipped.
    pub fn from_canonical_text(text: &str) -> Result<Self> {
        let mut m = WeightMultiset::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (c, n) = line
                .split_once(" x")
                .ok_or_else(|| Error::Parse(format!("expected 'i,j,k xM', got {line:?}")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in {line:?}")))?;
            if n == 0 {
                return Err(Error::Parse(format!("zero multiplicity in {line:?}")));
            }
            m.insert_n(c.parse()?, n);
        }
        Ok(m)
    }
}

impl FromIterator<Character> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Character>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for c in iter {
            m.insert(c);
        }
        m
    }
}

impl Extend<Character> for WeightMultiset {
    fn extend<I: IntoIterator<Item = Character>>(&mut self, iter: I) {
        for c in iter {
            self.insert(c);
        }
    }
}

impl<'a> IntoIterator for &'a WeightMultiset {
    type Item = Character;
    type IntoIter = Box<dyn Iterator<Item = Character> + 'a>;

    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.iter_expanded())
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

pub fn shift(c: Character, m: &WeightMultiset) -> WeightMultiset {
    WeightMultiset {
        entries: m.entries.iter().map(|(&w, &n)| (w + c, n)).collect(),
    }
}

/// Lenient difference: removes one occurrence of each element of `b` that is
/// present in `a` and silently ignores the rest.
pub fn msub(a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    let mut out = a.clone();
    for c in b.iter_expanded() {
        out.remove_one(c);
    }
    out
}

/// Strict difference: every element of `b` must be present in `a` with
/// sufficient multiplicity.
pub fn msub_strict(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    let mut out = a.clone();
    for (c, n) in b.iter() {
        if a.multiplicity(c) < n {
            return Err(Error::ContainmentViolation {
                missing: c,
                component: None,
            });
        }
        for _ in 0..n {
            out.remove_one(c);
        }
    }
    Ok(out)
}

/// `⟨λ, χ⟩` for every element, repeated with multiplicity, in canonical order.
pub fn pair_values(m: &WeightMultiset, lambda: OneParamSubgroup) -> Vec<i64> {
    m.iter_expanded().map(|c| lambda.pair(c)).collect()
}

pub fn positive_part(values: &[i64]) -> usize {
    values.iter().filter(|&&v| v > 0).count()
}

pub fn permute(m: &WeightMultiset, p: Permutation) -> WeightMultiset {
    WeightMultiset {
        entries: m.entries.iter().map(|(&c, &n)| (p.apply(c), n)).collect(),
    }
}

/// The degree-5 part of the monomial ideal generated by `gens`, all of which
/// must be monomials of degree `gen_degree` (at most 5). Returned as a set.
pub fn ideal_degree5(gens: &WeightMultiset, gen_degree: i64) -> Result<WeightMultiset> {
    if !(0..=5).contains(&gen_degree) {
        if let Some(g) = gens.iter().next() {
            return Err(Error::BadGenerator {
                generator: g.0,
                expected_degree: gen_degree,
            });
        }
        return Ok(WeightMultiset::new());
    }
    let cofactors = sigma::monomials(5 - gen_degree);
    let mut hits = WeightMultiset::new();
    for (g, _) in gens.iter() {
        if !g.is_monomial() || g.degree() != gen_degree {
            return Err(Error::BadGenerator {
                generator: g,
                expected_degree: gen_degree,
            });
        }
        hits.extend_from(&shift(g, &cofactors));
    }
    Ok(sigma::quintics().intersection(&hits.support()))
}

/// The canonical character multisets `σ^l`, `σ^l_v` and `Σ^5`.
pub mod sigma {
    use super::{msub, shift, Character, WeightMultiset};

    /// All monomials of total degree `l` (`{1}` for `l = 0`).
    pub fn monomials(l: i64) -> WeightMultiset {
        let mut m = WeightMultiset::new();
        if l < 0 {
            return m;
        }
        for i in (0..=l).rev() {
            for j in (0..=l - i).rev() {
                m.insert(Character::new(i, j, l - i - j));
            }
        }
        m
    }

    /// `σ^0`: the six roots `x − y, y − x, x − z, z − x, y − z, z − y`.
    pub fn roots() -> WeightMultiset {
        let (x, y, z) = (Character::X, Character::Y, Character::Z);
        [x - y, y - x, x - z, z - x, y - z, z - y]
            .into_iter()
            .collect()
    }

    /// `σ^l`; for `l = 0` this is [`roots`].
    pub fn sigma(l: i64) -> WeightMultiset {
        if l == 0 {
            roots()
        } else {
            monomials(l)
        }
    }

    /// `σ^l_v = σ^l \ (v + σ^{l-1})`: degree-`l` monomials not divisible by `v`.
    pub fn restricted(l: i64, v: Character) -> WeightMultiset {
        msub(&monomials(l), &shift(v, &monomials(l - 1)))
    }

    /// `Σ^5`, the 21 quintic monomials.
    pub fn quintics() -> WeightMultiset {
        monomials(5)
    }
}
