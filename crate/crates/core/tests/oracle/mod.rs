//! Line-by-line transliteration of the reference Singular program.
//!
//! Deliberately independent of the library: characters are plain `[i64; 3]`,
//! lists are `Vec`s, `sub` is the lenient list difference of the original,
//! and the parameter data is written in the program's additive notation
//! (`2x+y+2z`). Beyond the global polynomial and counters it records, per
//! family, the counters and the `(dimension, p)` pair of every cell.
#![allow(dead_code)]

use std::collections::BTreeMap;

pub type V = [i64; 3];

/// Parses `2x+y-3z`, `-x-y`, `0`.
pub fn p(s: &str) -> V {
    let mut out = [0i64; 3];
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut sign = 1;
    let mut coef = String::new();
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if !coef.is_empty() {
                    panic!("dangling constant in {s}");
                }
                sign = if ch == '-' { -1 } else { 1 };
            }
            '0'..='9' => coef.push(ch),
            'x' | 'y' | 'z' => {
                let n: i64 = if coef.is_empty() {
                    1
                } else {
                    coef.parse().unwrap()
                };
                out["xyz".find(ch).unwrap()] += sign * n;
                coef.clear();
                sign = 1;
            }
            _ => panic!("unexpected {ch} in {s}"),
        }
    }
    assert!(coef.is_empty() || coef == "0", "bad polynomial {s}");
    out
}

/// `list(a, b, c)` from a comma-separated string.
pub fn list(s: &str) -> Vec<V> {
    s.split(',').map(p).collect()
}

fn plus(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn minus(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn neg(a: V) -> V {
    [-a[0], -a[1], -a[2]]
}

fn add(q: V, l: &[V]) -> Vec<V> {
    l.iter().map(|&c| plus(q, c)).collect()
}

fn positive_part(l: &[i64]) -> usize {
    l.iter().filter(|&&v| v > 0).count()
}

fn values(w: &[V], l: [i64; 3]) -> Vec<i64> {
    w.iter()
        .map(|c| c[0] * l[0] + c[1] * l[1] + c[2] * l[2])
        .collect()
}

/// Lenient difference: removes the first match of each element of `ll`, if any.
pub fn sub(l: &[V], ll: &[V]) -> Vec<V> {
    let mut out = l.to_vec();
    for e in ll {
        if let Some(i) = out.iter().position(|x| x == e) {
            out.remove(i);
        }
    }
    out
}

pub struct Sets {
    pub s1: Vec<V>,
    pub s2: Vec<V>,
    pub s2_0: Vec<V>,
    pub s2_1: Vec<V>,
    pub s3: Vec<V>,
    pub s4: Vec<V>,
    pub s5: Vec<V>,
}

pub fn sets() -> Sets {
    Sets {
        s1: list("x,y,z"),
        s2: list("2x,2y,2z,x+y,x+z,y+z"),
        s2_0: list("2y,2z,y+z"),
        s2_1: list("2x,2z,x+z"),
        s3: list("3x,3y,3z,2x+y,2x+z,x+2y,2y+z,x+2z,y+2z,x+y+z"),
        s4: list("4x,4y,4z,3x+y,2x+2y,x+3y,3x+z,2x+2z,x+3z,3y+z,2y+2z,y+3z,2x+y+z,x+2y+z,x+y+2z"),
        s5: list(
            "5x,5y,5z,4x+y,3x+2y,2x+3y,x+4y,4x+z,3x+2z,2x+3z,x+4z,4y+z,3y+2z,2y+3z,y+4z,\
             3x+y+z,x+3y+z,x+y+3z,2x+2y+z,2x+y+2z,x+2y+2z",
        ),
    }
}

const O3: [[i64; 3]; 3] = [[0, 1, 7], [7, 1, 0], [0, 7, 1]];
const O3_1: [[i64; 3]; 3] = [[0, 1, 7], [1, 0, 7], [7, 1, 0]];
const O6: [[i64; 3]; 6] = [
    [0, 1, 7],
    [1, 0, 7],
    [7, 1, 0],
    [1, 7, 0],
    [0, 7, 1],
    [7, 0, 1],
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counter {
    pub points: usize,
    pub lines: usize,
    pub surfaces: usize,
    /// `(dimension, p)` of every cell, sorted.
    pub cells: Vec<(usize, usize)>,
}

pub struct Oracle {
    s: Sets,
    /// Coefficients of `P(x)`, index = exponent.
    pub poly: Vec<u64>,
    pub points: usize,
    pub lines: usize,
    pub families: BTreeMap<&'static str, Counter>,
    /// Every tangent list the program produced, by family.
    pub lists: Vec<(&'static str, Vec<V>)>,
}

impl Oracle {
    fn emit(&mut self, fam: &'static str, w: &[V], orbit: &[[i64; 3]], dim: usize) {
        self.lists.push((fam, w.to_vec()));
        let factor: &[u64] = match dim {
            0 => &[1],
            1 => &[1, 1],
            _ => &[1, 4, 1],
        };
        let c = self.families.entry(fam).or_default();
        for &l in orbit {
            let pp = positive_part(&values(w, l));
            for (k, &f) in factor.iter().enumerate() {
                self.poly[2 * (pp + k)] += f;
            }
            c.cells.push((dim, pp));
        }
        match dim {
            0 => {
                self.points += orbit.len();
                c.points += orbit.len();
            }
            1 => {
                self.lines += orbit.len();
                c.lines += orbit.len();
            }
            _ => c.surfaces += orbit.len(),
        }
    }

    fn id2(&self, l: &[V]) -> Vec<V> {
        let ll: Vec<V> = l.iter().flat_map(|&g| add(g, &self.s.s3)).collect();
        sub(&self.s.s5, &sub(&self.s.s5, &ll))
    }

    fn id3(&self, l: &[V]) -> Vec<V> {
        let ll: Vec<V> = l.iter().flat_map(|&g| add(g, &self.s.s2)).collect();
        sub(&self.s.s5, &sub(&self.s.s5, &ll))
    }

    fn w0(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s = &self.s;
        let mut r = Vec::new();
        for &vi in v {
            r.extend(add(minus(neg(vi), u[0]), &s.s2));
            r.extend(add(minus(neg(vi), u[1]), &s.s2));
            r.extend(add(minus(neg(vi), u[2]), &s.s1));
        }
        r
    }

    fn g0(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s1 = &self.s.s1;
        let mut r = vec![
            minus(u[0], u[0]),
            minus(u[0], u[1]),
            plus(neg(v[0]), v[0]),
            plus(neg(v[0]), v[1]),
            plus(neg(v[0]), v[2]),
            minus(u[1], u[0]),
            minus(u[1], u[1]),
            plus(neg(v[1]), v[0]),
            plus(neg(v[1]), v[1]),
            plus(neg(v[1]), v[2]),
        ];
        r.extend(add(minus(u[2], u[0]), s1));
        r.extend(add(minus(u[2], u[1]), s1));
        r.extend([
            plus(neg(v[2]), v[0]),
            plus(neg(v[2]), v[1]),
            plus(neg(v[2]), v[2]),
        ]);
        r
    }

    pub fn m0(&self, u: &[V], v: &[V]) -> Vec<V> {
        sub(&self.w0(u, v), &self.g0(u, v))
    }

    fn w1(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s = &self.s;
        let e = |r: usize, c: usize| minus(neg(v[r]), u[c]);
        let mut out = add(e(0, 0), &s.s1);
        out.extend(add(e(0, 1), &s.s1));
        out.extend([e(0, 2), e(0, 3)]);
        for r in 1..4 {
            out.extend(add(e(r, 0), &s.s2));
            out.extend(add(e(r, 1), &s.s2));
            out.extend(add(e(r, 2), &s.s1));
            out.extend(add(e(r, 3), &s.s1));
        }
        out
    }

    fn g1(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s1 = &self.s.s1;
        let mut r = Vec::new();
        for k in 1..4 {
            r.extend(add(plus(neg(v[k]), v[0]), s1));
            r.extend([
                plus(neg(v[k]), v[1]),
                plus(neg(v[k]), v[2]),
                plus(neg(v[k]), v[3]),
            ]);
        }
        let o = [0, 0, 0];
        r.extend([
            o,
            o,
            o,
            o,
            minus(u[0], u[1]),
            minus(u[1], u[0]),
            minus(u[2], u[3]),
            minus(u[3], u[2]),
        ]);
        r.extend(add(minus(u[2], u[0]), s1));
        r.extend(add(minus(u[2], u[1]), s1));
        r.extend(add(minus(u[3], u[0]), s1));
        r.extend(add(minus(u[3], u[1]), s1));
        r
    }

    pub fn m1(&self, u: &[V], v: &[V], s: &[V]) -> Vec<V> {
        sub(&self.w1(u, v), &sub(&self.g1(u, v), s))
    }

    fn w2(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s = &self.s;
        let mut r = Vec::new();
        for (vi, set) in [(v[0], &s.s1), (v[1], &s.s1), (v[2], &s.s3)] {
            for &ui in u {
                r.extend(add(minus(neg(vi), ui), set));
            }
        }
        r
    }

    fn g2(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s2 = &self.s.s2;
        let mut r = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                r.push(minus(u[i], u[j]));
            }
        }
        r.extend([
            [0, 0, 0],
            [0, 0, 0],
            plus(neg(v[0]), v[1]),
            plus(neg(v[1]), v[0]),
        ]);
        r.extend(add(plus(neg(v[2]), v[0]), s2));
        r.extend(add(plus(neg(v[2]), v[1]), s2));
        r
    }

    pub fn m2(&self, u: &[V], v: &[V]) -> Vec<V> {
        let xyz = p("x+y+z");
        let mut r = sub(&self.w2(u, v), &self.g2(u, v));
        r.extend(u.iter().map(|&ui| minus(plus(ui, v[2]), xyz)));
        r
    }

    fn w3(&self, u: &[V], v: &[V]) -> Vec<V> {
        let s = &self.s;
        let mut r = add(minus(neg(v[0]), u[0]), &s.s3);
        r.extend(add(minus(neg(v[0]), u[1]), &s.s1));
        r.extend(add(minus(neg(v[1]), u[0]), &s.s4));
        r.extend(add(minus(neg(v[1]), u[1]), &s.s2));
        r
    }

    fn g3(&self, u: &[V], v: &[V]) -> Vec<V> {
        let mut r = vec![[0, 0, 0]; 3];
        r.extend(add(minus(u[1], u[0]), &self.s.s2));
        r.extend(add(plus(neg(v[1]), v[0]), &self.s.s1));
        r
    }

    pub fn m3(&self, u: &[V], v: &[V]) -> Vec<V> {
        let mut r = sub(&self.w3(u, v), &self.g3(u, v));
        r.push(minus(plus(u[0], v[0]), p("x+y+z")));
        for t in ["2x+y+z", "x+2y+z", "x+y+2z"] {
            r.push(minus(plus(u[0], v[1]), p(t)));
        }
        r
    }
}

fn delta_uv(d: V, q1: V, q2: V) -> (Vec<V>, Vec<V>) {
    let (x, y) = (p("x"), p("y"));
    (
        vec![
            minus(minus(minus(d, x), y), q2),
            minus(minus(minus(d, x), y), q1),
            [0; 3],
        ],
        vec![x, y, plus(plus(plus(plus(neg(d), q1), q2), x), y)],
    )
}

/// One `q1, q2` block of the δ section: point generators, point exclusions,
/// point orbit, and the optional line list with its orbit.
struct DeltaBlock {
    q1: &'static str,
    q2: &'static str,
    gens: &'static str,
    excl: &'static str,
    orbit: &'static [[i64; 3]],
    lines: Option<(&'static str, &'static [[i64; 3]])>,
}

/// One parameter block of an `M1` family.
struct M1Block {
    family: &'static str,
    l1: &'static str,
    l2: &'static str,
    excl: &'static str,
    orbit: &'static [[i64; 3]],
    lines: Option<(&'static str, &'static [[i64; 3]])>,
}

/// Runs the whole program.
pub fn run() -> Oracle {
    let mut o = Oracle {
        s: sets(),
        poly: vec![0; 60],
        points: 0,
        lines: 0,
        families: BTreeMap::new(),
        lists: Vec::new(),
    };
    let (x, y, z) = (p("x"), p("y"), p("z"));
    let xyz = list("x,y,z");
    let zero = [0i64; 3];

    // alpha
    for i in 0..3 {
        for j in 0..3 {
            let u = [minus(o.s.s2_0[i], x), minus(o.s.s2_1[j], y), zero];
            let w = o.m0(&u, &xyz);
            o.emit("alpha", &w, &O3, 0);
        }
    }
    let w = o.m0(&[x, x, zero], &xyz);
    o.emit("alpha", &w, &O3_1, 0);

    // beta
    for i in 0..3 {
        for j in 0..3 {
            let u = [minus(o.s.s2_0[i], x), o.s.s1[j], zero];
            let w = o.m0(&u, &xyz);
            o.emit("beta", &w, &O3_1, 1);
        }
    }

    // gamma
    let w = o.m0(&[x, y, zero], &xyz);
    o.emit("gamma", &w, &O3, 2);

    // delta
    let blocks = [
        DeltaBlock {
            q1: "2x",
            q2: "2y",
            gens: "3x,x+2y,2x+y,3y",
            excl: "2x+2y+z",
            orbit: &O3,
            lines: Some(("2x+2y+z", &O3)),
        },
        DeltaBlock {
            q1: "2x",
            q2: "2z",
            gens: "3x,x+2z,2x+y,y+2z",
            excl: "3x+y+z",
            orbit: &O6,
            lines: None,
        },
        DeltaBlock {
            q1: "2z",
            q2: "x+y",
            gens: "x+2z,2x+y,y+2z,x+2y",
            excl: "2x+2y+z",
            orbit: &O3,
            lines: None,
        },
        DeltaBlock {
            q1: "2x",
            q2: "y+z",
            gens: "3x,x+y+z,2x+y,2y+z",
            excl: "2x+y+2z,3x+2y",
            orbit: &O6,
            lines: Some(("2x+y+2z", &O6)),
        },
        DeltaBlock {
            q1: "2x",
            q2: "x+y",
            gens: "3x,2x+y,x+2y",
            excl: "2x+y+2z,3x+y+z,2x+2y+z,2x+3y",
            orbit: &O6,
            lines: Some(("2x+y+2z,3x+y+z,2x+2y+z,2x+3y", &O6)),
        },
        DeltaBlock {
            q1: "x+z",
            q2: "y+z",
            gens: "2x+z,x+y+z,2y+z",
            excl: "x+y+3z,x+3y+z,2x+2y+z,3x+y+z",
            orbit: &O3,
            lines: Some(("x+y+3z,x+3y+z,3x+y+z", &O3)),
        },
        DeltaBlock {
            q1: "2x",
            q2: "x+z",
            gens: "3x,2x+z,2x+y,x+y+z",
            excl: "3x+2z,2x+y+2z,2x+2y+z,4x+y",
            orbit: &O6,
            lines: Some(("3x+2z,2x+y+2z,2x+2y+z", &O6)),
        },
        DeltaBlock {
            q1: "x+y",
            q2: "y+z",
            gens: "2x+y,x+y+z,x+2y,2y+z",
            excl: "x+2y+2z,2x+y+2z,2x+3y,3x+y+z",
            orbit: &O6,
            lines: Some(("x+2y+2z,2x+y+2z,3x+y+z", &O6)),
        },
        DeltaBlock {
            q1: "x+z",
            q2: "2z",
            gens: "2x+z,x+2z,x+y+z,y+2z",
            excl: "x+2y+2z,2x+y+2z,3x+2z",
            orbit: &O6,
            lines: Some(("x+2y+2z,3x+2z", &O6)),
        },
    ];
    for b in &blocks {
        let (q1, q2) = (p(b.q1), p(b.q2));
        let d = sub(&o.id3(&list(b.gens)), &list(b.excl));
        for &di in &d {
            let (u, v) = delta_uv(di, q1, q2);
            let w = o.m0(&u, &v);
            o.emit("delta", &w, b.orbit, 0);
        }
        if let Some((ls, orbit)) = b.lines {
            for di in list(ls) {
                let (u, v) = delta_uv(di, q1, q2);
                let w = o.m0(&u, &v);
                o.emit("delta", &w, orbit, 1);
            }
        }
    }

    // epsilon
    let eps_gens: Vec<V> = add(x, &list("x+y,x+z,y+z"))
        .into_iter()
        .chain(add(y, &list("x+y,x+z,y+z")))
        .collect();
    let eps = |o: &Oracle, d: V| {
        let u = [minus(d, y), minus(d, x), p("x+y+z"), p("x+y+z")];
        let v = [minus(plus(x, y), d), p("-y-z"), p("-x-z"), p("-x-y")];
        let s = [plus(neg(d), p("2x+2y+z")), plus(neg(d), p("2x+2y+z"))];
        o.m1(&u, &v, &s)
    };
    for di in sub(&o.id3(&eps_gens), &list("2x+2y+z,x+y+3z")) {
        let w = eps(&o, di);
        o.emit("epsilon", &w, &O3, 0);
    }
    for di in list("x+y+3z") {
        let w = eps(&o, di);
        o.emit("epsilon", &w, &O3, 1);
    }

    // zeta, eta, theta
    let m1_consts = |family: &str| -> (&'static str, [&'static str; 2], [&'static str; 3]) {
        match family {
            "zeta" => ("2x,x+y,y+z", ["2x+y", "x+y+z"], ["-2x", "-y-z", "-x-y"]),
            "eta" => ("2x,x+y,2y", ["x+2y", "2x+y"], ["-2y", "-2x", "-x-y"]),
            _ => ("2x,x+y,x+z", ["2x+y", "2x+z"], ["-x-y", "-x-z", "-2x"]),
        }
    };
    let m1_blocks = [
        M1Block {
            family: "zeta",
            l1: "x",
            l2: "y",
            excl: "3x+2y,2x+2y+z,2x+y+2z",
            orbit: &O6,
            lines: Some(("2x+y+2z", &O6)),
        },
        M1Block {
            family: "zeta",
            l1: "x",
            l2: "z",
            excl: "3x+y+z,2x+y+2z,x+3y+z",
            orbit: &O6,
            lines: Some(("x+3y+z", &O6)),
        },
        M1Block {
            family: "zeta",
            l1: "y",
            l2: "z",
            excl: "2x+2y+z,x+2y+2z",
            orbit: &O6,
            lines: None,
        },
        M1Block {
            family: "eta",
            l1: "x",
            l2: "y",
            excl: "3x+2y,2x+3y,x+2y+2z,2x+y+2z",
            orbit: &O3,
            lines: Some(("x+2y+2z,2x+y+2z", &O3)),
        },
        M1Block {
            family: "eta",
            l1: "x",
            l2: "z",
            excl: "2x+2y+z,3x+y+z",
            orbit: &O6,
            lines: None,
        },
        M1Block {
            family: "theta",
            l1: "x",
            l2: "y",
            excl: "3x+y+z,3x+2y,2x+y+2z,x+3y+z,x+2y+2z",
            orbit: &O6,
            lines: Some(("2x+y+2z,x+3y+z,x+2y+2z", &O6)),
        },
        M1Block {
            family: "theta",
            l1: "y",
            l2: "z",
            excl: "2x+2y+z,2x+y+2z,x+y+3z,x+2y+2z,x+3y+z",
            orbit: &O3_1,
            lines: Some(("x+y+3z,x+2y+2z,x+3y+z", &O3_1)),
        },
    ];
    for b in &m1_blocks {
        let (gens, us, vs) = m1_consts(b.family);
        let (l1, l2) = (p(b.l1), p(b.l2));
        let tangent = |o: &Oracle, d: V| {
            let v1 = plus(plus(neg(d), l1), l2);
            let u = [minus(d, l2), minus(d, l1), p(us[0]), p(us[1])];
            let v = [v1, p(vs[0]), p(vs[1]), p(vs[2])];
            let s = [plus(p(us[0]), v1), plus(p(us[1]), v1)];
            o.m1(&u, &v, &s)
        };
        let g: Vec<V> = add(l1, &list(gens))
            .into_iter()
            .chain(add(l2, &list(gens)))
            .collect();
        for di in sub(&o.id3(&g), &list(b.excl)) {
            let w = tangent(&o, di);
            o.emit(b.family, &w, b.orbit, 0);
        }
        if let Some((ls, orbit)) = b.lines {
            for di in list(ls) {
                let w = tangent(&o, di);
                o.emit(b.family, &w, orbit, 1);
            }
        }
    }

    // iota: one evaluation per d, counted in bulk
    let xyz_sum = p("x+y+z");
    for di in sub(
        &o.id2(&list("x+y,x+z,y+z")),
        &list("2x+2y+z,x+2y+2z,2x+y+2z"),
    ) {
        let w = o.m2(&xyz, &[zero, zero, minus(di, xyz_sum)]);
        o.lists.push(("iota", w.clone()));
        let pp = positive_part(&values(&w, [0, 1, 7]));
        o.poly[2 * pp] += 1;
        o.families.entry("iota").or_default().cells.push((0, pp));
    }
    o.points += 15;
    o.families.entry("iota").or_default().points += 15;

    for di in sub(&o.id2(&list("2x,x+y,y+z")), &list("x+2y+2z,3x+y+z,2x+2y+z")) {
        let w = o.m2(
            &[minus(y, x), minus(x, z), zero],
            &[x, z, minus(minus(di, x), y)],
        );
        o.emit("kappa", &w, &O6, 0);
    }
    for di in sub(&o.id2(&list("2x,x+y,2y")), &list("x+3y+z,3x+y+z,2x+2y+z")) {
        let w = o.m2(
            &[minus(x, y), minus(y, x), zero],
            &[y, x, minus(minus(di, x), y)],
        );
        o.emit("lambda", &w, &O3, 0);
    }
    let mu = |o: &Oracle, d: V| {
        o.m2(
            &[minus(x, y), minus(x, z), zero],
            &[y, z, minus(d, p("2x"))],
        )
    };
    for di in sub(
        &o.id2(&list("2x,x+y,x+z")),
        &list("x+y+3z,x+2y+2z,x+3y+z,2x+y+2z,2x+2y+z,3x+y+z"),
    ) {
        let w = mu(&o, di);
        o.emit("mu", &w, &O3_1, 0);
    }
    for di in list("x+y+3z,x+2y+2z,x+3y+z") {
        let w = mu(&o, di);
        o.emit("mu", &w, &O3_1, 1);
    }

    // nu
    let s5 = o.s.s5.clone();
    for (q, excl, orbit) in [
        ("2y", "x+3y+z,2x+y+2z,3x+y+z,2x+2y+z,5z,y+4z", &O6[..]),
        ("y+z", "x+2y+2z,2x+y+2z,3x+y+z,2x+2y+z,5y,5z", &O3_1[..]),
    ] {
        let q = p(q);
        for di in sub(&s5, &list(excl)) {
            let w = o.m3(&[minus(minus(di, q), x), zero], &[x, q]);
            o.emit("nu", &w, orbit, 0);
        }
    }

    for c in o.families.values_mut() {
        c.cells.sort_unstable();
    }
    o
}

/// Even coefficients `b_0, b_2, …, b_52` of the oracle polynomial.
pub fn even_betti(o: &Oracle) -> Vec<u64> {
    (0..=26).map(|k| o.poly[2 * k]).collect()
}

/// `Σ_d |orbit|` over the δ line lists, from the program data alone.
pub fn delta_line_count(o: &Oracle) -> usize {
    o.families.get("delta").map_or(0, |c| c.lines)
}
