use serde::Serialize;

use super::{Adjunction, Category, FinCategory, Functor, NatTrans};

/// Violated law instances. Empty means the checked laws hold.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: String) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: LawReport) {
        self.violations.extend(other.violations);
    }
}

/// Every morphism between enumerated objects, grouped by `(dom, cod)` in
/// enumeration order.
pub fn all_morphisms<C: Category>(c: &C) -> Vec<C::Mor> {
    let obs = c.objects();
    let mut out = Vec::new();
    for x in &obs {
        for y in &obs {
            out.extend(c.hom(x, y));
        }
    }
    out
}

/// Checks closure, unit laws and associativity of a table category.
pub fn validate_category(c: &FinCategory) -> LawReport {
    let mut r = LawReport::default();
    let mors = c.morphisms();
    let m = mors.len();
    for (x, &i) in c.identities().iter().enumerate() {
        if mors[i] != (x, x) {
            r.push(format!("identity {i} of object {x} is not an endomorphism of {x}"));
        }
    }
    for g in 0..m {
        for f in 0..m {
            if mors[f].1 != mors[g].0 {
                continue;
            }
            match c.composite(g, f) {
                None => r.push(format!("composite {g}∘{f} missing")),
                Some(h) if mors[h] != (mors[f].0, mors[g].1) => {
                    r.push(format!("composite {g}∘{f} = {h} has wrong domain or codomain"))
                }
                _ => {}
            }
        }
    }
    if !r.is_ok() {
        return r;
    }
    for f in 0..m {
        let (x, y) = mors[f];
        if c.composite(c.identity_of(y), f) != Some(f) {
            r.push(format!("id∘{f} ≠ {f}"));
        }
        if c.composite(f, c.identity_of(x)) != Some(f) {
            r.push(format!("{f}∘id ≠ {f}"));
        }
    }
    for f in 0..m {
        for g in 0..m {
            if mors[f].1 != mors[g].0 {
                continue;
            }
            let gf = c.composite(g, f).unwrap();
            for h in 0..m {
                if mors[g].1 != mors[h].0 {
                    continue;
                }
                let hg = c.composite(h, g).unwrap();
                if c.composite(h, gf) != c.composite(hg, f) {
                    r.push(format!("associativity fails for ({h},{g},{f})"));
                }
            }
        }
    }
    r
}

/// Unit and associativity laws over the enumerated objects of any category.
pub fn check_category<C: Category>(c: &C) -> LawReport {
    let mut r = LawReport::default();
    let obs = c.objects();
    for x in &obs {
        for y in &obs {
            for f in c.hom(x, y) {
                if c.dom(&f) != *x || c.cod(&f) != *y {
                    r.push(format!("{f:?} listed in hom({x:?},{y:?}) with other ends"));
                }
                if c.compose(&c.id(y), &f) != f || c.compose(&f, &c.id(x)) != f {
                    r.push(format!("unit law fails at {f:?}"));
                }
                for z in &obs {
                    for g in c.hom(y, z) {
                        let gf = c.compose(&g, &f);
                        if c.dom(&gf) != *x || c.cod(&gf) != *z {
                            r.push(format!("composite {g:?}∘{f:?} has wrong ends"));
                        }
                        for w in &obs {
                            for h in c.hom(z, w) {
                                if c.compose(&h, &gf) != c.compose(&c.compose(&h, &g), &f) {
                                    r.push(format!("associativity fails at ({h:?},{g:?},{f:?})"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// Preservation of domains, codomains, identities and composites.
pub fn check_functor<S: Category, T: Category>(f: &Functor<S, T>) -> LawReport {
    let mut r = LawReport::default();
    let (s, t) = (f.source(), f.target());
    let obs = s.objects();
    for x in &obs {
        if f.mor(&s.id(x)) != t.id(&f.ob(x)) {
            r.push(format!("F(id_{x:?}) is not an identity"));
        }
    }
    for x in &obs {
        for y in &obs {
            let homs = s.hom(x, y);
            for a in &homs {
                let fa = f.mor(a);
                if t.dom(&fa) != f.ob(x) || t.cod(&fa) != f.ob(y) {
                    r.push(format!("F({a:?}) has wrong domain or codomain"));
                    continue;
                }
                for z in &obs {
                    for b in s.hom(y, z) {
                        let fb = f.mor(&b);
                        if t.dom(&fb) != t.cod(&fa) {
                            continue;
                        }
                        if f.mor(&s.compose(&b, a)) != t.compose(&fb, &fa) {
                            r.push(format!("F({b:?}∘{a:?}) ≠ F({b:?})∘F({a:?})"));
                        }
                    }
                }
            }
        }
    }
    r
}

/// Typing of components and every naturality square.
pub fn check_natural<S: Category, T: Category>(a: &NatTrans<S, T>) -> LawReport {
    let mut r = LawReport::default();
    let (f, g) = (a.source(), a.target());
    let (s, t) = (f.source(), f.target());
    let obs = s.objects();
    for x in &obs {
        let c = a.at(x);
        if t.dom(&c) != f.ob(x) || t.cod(&c) != g.ob(x) {
            r.push(format!("component at {x:?} has wrong domain or codomain"));
        }
    }
    if !r.is_ok() {
        return r;
    }
    for x in &obs {
        for y in &obs {
            for m in s.hom(x, y) {
                if t.compose(&g.mor(&m), &a.at(x)) != t.compose(&a.at(y), &f.mor(&m)) {
                    r.push(format!("naturality square fails at {m:?}"));
                }
            }
        }
    }
    r
}

/// Both triangle identities, componentwise.
pub fn check_adjunction<C: Category, D: Category>(adj: &Adjunction<C, D>) -> LawReport {
    let mut r = LawReport::default();
    let (c, d) = (adj.right.source(), adj.left.source());
    r.extend(check_natural(&adj.unit));
    r.extend(check_natural(&adj.counit));
    if !r.is_ok() {
        return r;
    }
    for x in d.objects() {
        let lx = adj.left.ob(&x);
        let lhs = c.compose(&adj.counit.at(&lx), &adj.left.mor(&adj.unit.at(&x)));
        if lhs != c.id(&lx) {
            r.push(format!("triangle ε_L · Lη ≠ id at {x:?}"));
        }
    }
    for y in c.objects() {
        let ry = adj.right.ob(&y);
        let lhs = d.compose(&adj.right.mor(&adj.counit.at(&y)), &adj.unit.at(&ry));
        if lhs != d.id(&ry) {
            r.push(format!("triangle Rε · η_R ≠ id at {y:?}"));
        }
    }
    r
}

/// Strict equality on enumerated objects and morphisms; a witness otherwise.
pub fn functors_equal<S: Category, T: Category>(f: &Functor<S, T>, g: &Functor<S, T>) -> Option<String> {
    let s = f.source();
    for x in s.objects() {
        if f.ob(&x) != g.ob(&x) {
            return Some(format!("objects differ at {x:?}"));
        }
    }
    for m in all_morphisms(s.as_ref()) {
        if f.mor(&m) != g.mor(&m) {
            return Some(format!("morphisms differ at {m:?}"));
        }
    }
    None
}

/// Strict componentwise equality; a witness otherwise.
pub fn nat_equal<S: Category, T: Category>(a: &NatTrans<S, T>, b: &NatTrans<S, T>) -> Option<String> {
    for x in a.source().source().objects() {
        if a.at(&x) != b.at(&x) {
            return Some(format!("components differ at {x:?}"));
        }
    }
    None
}
