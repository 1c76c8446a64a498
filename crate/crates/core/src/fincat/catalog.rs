//! Small named categories, finite monoids and a random category generator.

use rand::Rng;

use super::{validate_category, FinCategory};
use crate::error::{Error, Result};

/// A finite monoid on `0..n` with unit `0` and multiplication table `mul[x][y] = x·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monoid {
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

impl Monoid {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Structural("monoid table has the wrong shape".into()));
        }
        let m = Monoid { names, mul };
        for x in 0..n {
            if m.mul[0][x] != x || m.mul[x][0] != x {
                return Err(Error::Invalid(format!("element 0 is not a unit at {}", m.names[x])));
            }
            for y in 0..n {
                for z in 0..n {
                    if m.mul[m.mul[x][y]][z] != m.mul[x][m.mul[y][z]] {
                        return Err(Error::Invalid(format!(
                            "associativity fails at ({},{},{})",
                            m.names[x], m.names[y], m.names[z]
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    fn from_fn(names: &[&str], f: impl Fn(usize, usize) -> usize) -> Monoid {
        let n = names.len();
        let mul = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Monoid::new(names.iter().map(|s| s.to_string()).collect(), mul).expect("catalog monoid")
    }

    pub fn trivial() -> Monoid {
        Self::from_fn(&["1"], |_, _| 0)
    }

    /// `{1, e}` with `e·e = e`.
    pub fn m2() -> Monoid {
        Self::from_fn(&["1", "e"], |x, y| x.max(y))
    }

    pub fn cyclic(n: usize) -> Monoid {
        let names: Vec<String> = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g{i}") }).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Self::from_fn(&refs, |x, y| (x + y) % n)
    }

    /// `{1, a, b}` with `x·y = x` for `x, y ≠ 1`.
    pub fn left_zero() -> Monoid {
        Self::from_fn(&["1", "a", "b"], |x, y| if x == 0 { y } else { x })
    }

    /// `{1, a, b}` with `x·y = y` for `x, y ≠ 1`.
    pub fn right_zero() -> Monoid {
        Self::from_fn(&["1", "a", "b"], |x, y| if y == 0 { x } else { y })
    }

    /// `{1, a, 0}` with `a·a = 0` and `0` absorbing.
    pub fn nilpotent() -> Monoid {
        Self::from_fn(&["1", "a", "z"], |x, y| if x == 0 { y } else if y == 0 { x } else { 2 })
    }

    /// The one-object category with this monoid of endomorphisms.
    pub fn as_category(&self) -> FinCategory {
        let n = self.size();
        FinCategory::from_fn(1, &vec![(0, 0); n], &[0], |g, f| self.mul[g][f]).expect("monoid category")
    }
}

/// The category `0 → 1`.
pub fn arrow() -> FinCategory {
    chain(2)
}

/// The total order `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FinCategory {
    preorder(n, |a, b| a <= b)
}

/// Two parallel arrows `0 ⇉ 1`.
pub fn parallel_pair() -> FinCategory {
    FinCategory::build(2, &[(0, 0), (1, 1), (0, 1), (0, 1)], &[0, 1], &[(0, 0, 0), (1, 1, 1), (2, 0, 2), (3, 0, 3), (1, 2, 2), (1, 3, 3)])
        .expect("parallel pair")
}

/// Two uniquely isomorphic objects.
pub fn iso_pair() -> FinCategory {
    preorder(2, |_, _| true)
}

/// `0 ← 2 → 1`.
pub fn span() -> FinCategory {
    preorder(3, |a, b| a == b || a == 2)
}

/// `0 → 2 ← 1`.
pub fn cospan() -> FinCategory {
    preorder(3, |a, b| a == b || b == 2)
}

/// The preorder on `0..n` given by `leq`, which must be reflexive and transitive.
pub fn preorder(n: usize, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let mut morphisms = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in 0..n {
            if leq(a, b) {
                index[a][b] = morphisms.len();
                morphisms.push((a, b));
            }
        }
    }
    let ids: Vec<usize> = (0..n).map(|a| index[a][a]).collect();
    let c = FinCategory::from_fn(n, &morphisms, &ids, |g, f| index[morphisms[f].0][morphisms[g].1]);
    c.expect("preorder")
}

/// Objects `one`, `b` with `p: one → b`, `r: b → one`, `r∘p = id` and the
/// idempotent `e = p∘r` on `b`. Object `0` is terminal.
pub fn retraction() -> FinCategory {
    // 0 id_1, 1 id_b, 2 r: b→1, 3 p: 1→b, 4 e: b→b
    let mors = [(0, 0), (1, 1), (1, 0), (0, 1), (1, 1)];
    FinCategory::from_fn(2, &mors, &[0, 1], |g, f| match (g, f) {
        (0, f) => f,
        (1, f) => f,
        (g, 0) => g,
        (g, 1) => g,
        (2, 3) => 0,
        (3, 2) => 4,
        (2, 4) => 2,
        (4, 3) => 3,
        (4, 4) => 4,
        _ => unreachable!("not composable"),
    })
    .expect("retraction")
}

/// An object with an involution and an arrow out of it: `t: 0→0`, `t² = id`, `f: 0→1`.
pub fn involution_arrow() -> FinCategory {
    // 0 id0, 1 id1, 2 t, 3 f, 4 f∘t
    let mors = [(0, 0), (1, 1), (0, 0), (0, 1), (0, 1)];
    FinCategory::from_fn(2, &mors, &[0, 1], |g, f| match (g, f) {
        (1, f) => f,
        (g, 0) => g,
        (0, f) => f,
        (2, 2) => 0,
        (3, 2) => 4,
        (4, 2) => 3,
        _ => unreachable!("not composable"),
    })
    .expect("involution arrow")
}

/// Disjoint union.
pub fn coproduct(a: &FinCategory, b: &FinCategory) -> FinCategory {
    let (na, ma) = (a.object_count(), a.morphism_count());
    let mut morphisms = a.morphisms();
    morphisms.extend(b.morphisms().into_iter().map(|(x, y)| (x + na, y + na)));
    let mut ids = a.identities().to_vec();
    ids.extend(b.identities().iter().map(|i| i + ma));
    let mut entries = a.composition_entries();
    entries.extend(b.composition_entries().into_iter().map(|(g, f, h)| (g + ma, f + ma, h + ma)));
    FinCategory::from_tables(na + b.object_count(), &morphisms, &ids, &entries).expect("coproduct")
}

/// Cartesian product; object `(x, y)` has index `x·|ob b| + y`.
pub fn product(a: &FinCategory, b: &FinCategory) -> FinCategory {
    let (nb, mb) = (b.object_count(), b.morphism_count());
    let (am, bm) = (a.morphisms(), b.morphisms());
    let mut morphisms = Vec::new();
    for f in &am {
        for g in &bm {
            morphisms.push((f.0 * nb + g.0, f.1 * nb + g.1));
        }
    }
    let ids: Vec<usize> = (0..a.object_count())
        .flat_map(|x| (0..nb).map(move |y| (x, y)))
        .map(|(x, y)| a.identity_of(x) * mb + b.identity_of(y))
        .collect();
    FinCategory::from_fn(a.object_count() * nb, &morphisms, &ids, |g, f| {
        let (g1, g2) = (g / mb, g % mb);
        let (f1, f2) = (f / mb, f % mb);
        a.composite(g1, f1).unwrap() * mb + b.composite(g2, f2).unwrap()
    })
    .expect("product")
}

/// The catalog used by the random generators, each entry with ≤ 3 objects
/// and ≤ 8 morphisms.
pub fn small_catalog() -> Vec<FinCategory> {
    let mut out = vec![
        FinCategory::terminal(),
        FinCategory::discrete(2),
        arrow(),
        iso_pair(),
        parallel_pair(),
        span(),
        cospan(),
        chain(3),
        retraction(),
        involution_arrow(),
        Monoid::m2().as_category(),
        Monoid::cyclic(2).as_category(),
        Monoid::cyclic(3).as_category(),
        Monoid::left_zero().as_category(),
        Monoid::right_zero().as_category(),
        Monoid::nilpotent().as_category(),
        coproduct(&FinCategory::terminal(), &iso_pair()),
        coproduct(&FinCategory::terminal(), &arrow()),
        coproduct(&Monoid::cyclic(2).as_category(), &FinCategory::terminal()),
        product(&arrow(), &Monoid::cyclic(2).as_category()),
        preorder(3, |a, b| a == b || (a == 0 && b == 1) || (b == 2)),
        preorder(3, |a, b| a == b || a == 0 || (a == 1 && b == 2) || (a == 2 && b == 1)),
    ];
    out.retain(|c| c.object_count() <= 3 && c.morphism_count() <= 8);
    out
}

/// A random category with at most `max_objects` objects and `max_morphisms`
/// morphisms: a catalog entry, a random preorder, or a coproduct of two.
pub fn random_category<R: Rng>(rng: &mut R, max_objects: usize, max_morphisms: usize) -> FinCategory {
    let catalog = small_catalog();
    loop {
        let c = match rng.gen_range(0..4) {
            0 | 1 => catalog[rng.gen_range(0..catalog.len())].clone(),
            2 => {
                let n = rng.gen_range(1..=max_objects.max(1));
                let rel: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(0.35)).collect()).collect();
                let mut leq = vec![vec![false; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        leq[a][b] = a == b || rel[a][b];
                    }
                }
                for k in 0..n {
                    for a in 0..n {
                        for b in 0..n {
                            if leq[a][k] && leq[k][b] {
                                leq[a][b] = true;
                            }
                        }
                    }
                }
                preorder(n, |a, b| leq[a][b])
            }
            _ => {
                let a = &catalog[rng.gen_range(0..catalog.len())];
                let b = &catalog[rng.gen_range(0..catalog.len())];
                coproduct(a, b)
            }
        };
        if c.object_count() <= max_objects && c.morphism_count() <= max_morphisms {
            debug_assert!(validate_category(&c).is_ok());
            return c;
        }
    }
}
