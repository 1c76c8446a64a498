//! Name resolution and validation: turns a [`Document`] into values of the
//! other modules.

use std::collections::HashMap;
use std::sync::Arc;

use super::ast::*;
use super::lexer::Span;
use crate::descent::eq_groupoid;
use crate::error::{Error, Result};
use crate::fincat::catalog::Monoid;
use crate::fincat::{check_functor, check_natural, find_left_adjoint, Adjunction, FinCategory, FinFunctor, NatTrans, PowerCat};
use crate::finset::{diagram_indexed_category, BasicIndexed, DiagramIndexed, FinSet, FinSetMap, SetDiagrams, Slice};
use crate::pseudo::{
    compose_indexed_with_precategory, nerve, sigma_precategory, validate_precategory, FamIndexed, Precategory,
    TruncCosimp,
};

fn sem<T>(span: Span, message: impl Into<String>) -> Result<T> {
    Err(Error::Semantic { line: span.line, col: span.col, message: message.into() })
}

/// A table category with names for its objects and morphisms.
#[derive(Clone, Debug)]
pub struct NamedCategory {
    pub cat: Arc<FinCategory>,
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
}

impl NamedCategory {
    pub fn object(&self, s: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == s)
    }

    pub fn morphism(&self, s: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m == s)
    }

    /// Default names: objects by index, identities `id_x`, other morphisms `m<i>`.
    pub fn anonymous(cat: FinCategory) -> Self {
        let objects: Vec<String> = (0..cat.object_count()).map(|x| x.to_string()).collect();
        let morphisms = (0..cat.morphism_count())
            .map(|f| {
                if cat.is_identity(f) {
                    format!("id_{}", objects[cat.morphisms()[f].0])
                } else {
                    format!("m{f}")
                }
            })
            .collect();
        NamedCategory { cat: Arc::new(cat), objects, morphisms }
    }
}

#[derive(Clone, Debug)]
pub struct NamedFunctor {
    pub source: String,
    pub target: String,
    pub functor: FinFunctor,
}

#[derive(Clone, Debug)]
pub enum PrecategoryValue {
    Sets(Precategory<FinSet>),
    /// `Eq(h)` for a functor `h`, built once the catalog of the indexed
    /// category it is paired with is known.
    FunctorKernel(FinFunctor),
}

#[derive(Clone, Debug)]
pub enum IndexedValue {
    Slice(BasicIndexed),
    Fam(FamIndexed),
    Diagrams(DiagramIndexed),
}

#[derive(Clone)]
pub enum PseudoValue {
    Slice(Arc<TruncCosimp<Slice>>),
    Fam(Arc<TruncCosimp<PowerCat>>),
    Diagrams(Arc<TruncCosimp<SetDiagrams>>),
}

pub enum Value {
    Category(NamedCategory),
    Map(FinSetMap),
    Monoid(Monoid, NamedCategory),
    Functor(NamedFunctor),
    NatTrans { source: String, target: String, components: Vec<usize> },
    Precategory(PrecategoryValue),
    Indexed(IndexedValue),
    Pseudofunctor(PseudoValue),
    Adjunction { right: String, adjunction: Adjunction<FinCategory, FinCategory> },
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Category(_) => "category",
            Value::Map(_) => "map",
            Value::Monoid(..) => "monoid",
            Value::Functor(_) => "functor",
            Value::NatTrans { .. } => "nattrans",
            Value::Precategory(_) => "precategory",
            Value::Indexed(_) => "indexed",
            Value::Pseudofunctor(_) => "pseudofunctor",
            Value::Adjunction { .. } => "adjunction",
        }
    }
}

/// A loaded document: every declaration resolved and validated, in order.
pub struct Env {
    pub doc: Document,
    values: HashMap<String, Value>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    pub fn names_of_kind(&self, kind: &str) -> Vec<String> {
        self.doc
            .decls
            .iter()
            .filter(|d| d.kind.keyword() == kind)
            .map(|d| d.name.text.clone())
            .collect()
    }

    fn lookup(&self, n: &Name) -> Result<&Value> {
        match self.values.get(&n.text) {
            Some(v) => Ok(v),
            None => sem(n.span, format!("unknown name `{}` (names must be declared before use)", n.text)),
        }
    }

    /// A category, or a monoid seen as a one-object category.
    pub fn category(&self, n: &Name) -> Result<&NamedCategory> {
        match self.lookup(n)? {
            Value::Category(c) | Value::Monoid(_, c) => Ok(c),
            v => sem(n.span, format!("`{}` is a {}, expected a category", n.text, v.kind())),
        }
    }

    pub fn functor(&self, n: &Name) -> Result<&NamedFunctor> {
        match self.lookup(n)? {
            Value::Functor(f) => Ok(f),
            v => sem(n.span, format!("`{}` is a {}, expected a functor", n.text, v.kind())),
        }
    }

    pub fn map(&self, n: &Name) -> Result<&FinSetMap> {
        match self.lookup(n)? {
            Value::Map(m) => Ok(m),
            v => sem(n.span, format!("`{}` is a {}, expected a map", n.text, v.kind())),
        }
    }
}

/// Resolves and validates every declaration.
pub fn load(doc: Document) -> Result<Env> {
    let mut env = Env { doc: Document::default(), values: HashMap::new() };
    for d in &doc.decls {
        if env.values.contains_key(&d.name.text) {
            return sem(d.name.span, format!("`{}` is declared twice", d.name.text));
        }
        let v = load_decl(&env, d)?;
        env.values.insert(d.name.text.clone(), v);
    }
    env.doc = doc;
    Ok(env)
}

/// Parses and loads.
pub fn load_str(text: &str) -> Result<Env> {
    load(super::parser::parse(text)?)
}

fn unique(names: &[Name], what: &str) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].iter().any(|m| m.text == n.text) {
            return sem(n.span, format!("{what} `{}` is declared twice", n.text));
        }
    }
    Ok(())
}

fn load_decl(env: &Env, d: &Decl) -> Result<Value> {
    match &d.kind {
        DeclKind::Category { objects, homs, compose } => load_category(d, objects, homs, compose).map(Value::Category),
        DeclKind::Map { dom, cod, image } => {
            if image.len() != *dom {
                return sem(d.span, format!("map `{}` lists {} images for a domain of size {dom}", d.name.text, image.len()));
            }
            if let Some(i) = image.iter().position(|&v| v >= *cod) {
                return sem(d.span, format!("image {} of {i} is outside [{cod}]", image[i]));
            }
            Ok(Value::Map(FinSetMap { cod: *cod, map: image.clone() }))
        }
        DeclKind::Monoid { elements, table } => load_monoid(d, elements, table),
        DeclKind::Functor { source, target, assign } => {
            let (s, t) = (env.category(source)?, env.category(target)?);
            load_functor(d, s, t, assign).map(|functor| {
                Value::Functor(NamedFunctor { source: source.text.clone(), target: target.text.clone(), functor })
            })
        }
        DeclKind::NatTrans { source, target, components } => {
            let (f, g) = (env.functor(source)?, env.functor(target)?);
            if f.source != g.source || f.target != g.target {
                return sem(
                    target.span,
                    format!(
                        "`{}: {} -> {}` and `{}: {} -> {}` are not parallel",
                        source.text, f.source, f.target, target.text, g.source, g.target
                    ),
                );
            }
            let s = env.category(&Name::new(f.source.clone()))?;
            let t = env.category(&Name::new(f.target.clone()))?;
            let mut comps = vec![None; s.objects.len()];
            for (x, a) in components {
                let i = s.object(&x.text).ok_or(()).or_else(|_| sem(x.span, format!("`{}` is not an object of {}", x.text, f.source)))?;
                let m = t.morphism(&a.text).ok_or(()).or_else(|_| sem(a.span, format!("`{}` is not a morphism of {}", a.text, f.target)))?;
                if comps[i].is_some() {
                    return sem(x.span, format!("component at `{}` is given twice", x.text));
                }
                comps[i] = Some(m);
            }
            let comps: Vec<usize> = match comps.iter().position(Option::is_none) {
                Some(i) => return sem(d.span, format!("missing component at `{}`", s.objects[i])),
                None => comps.into_iter().flatten().collect(),
            };
            let table = (0..comps.len()).map(|x| (x, comps[x])).collect();
            let nat = NatTrans::from_table(f.functor.to_functor(), g.functor.to_functor(), table);
            let rep = check_natural(&nat);
            if !rep.is_ok() {
                return sem(d.span, format!("`{}` is not natural: {}", d.name.text, rep.violations.join("; ")));
            }
            Ok(Value::NatTrans { source: source.text.clone(), target: target.text.clone(), components: comps })
        }
        DeclKind::Precategory(p) => {
            let pre = match p {
                PreSpec::Sigma(m) => match env.lookup(m)? {
                    Value::Monoid(m, _) => sigma_precategory(m),
                    v => return sem(m.span, format!("`{}` is a {}, expected a monoid", m.text, v.kind())),
                },
                PreSpec::Nerve(c) => nerve(&env.category(c)?.cat),
                PreSpec::Kernel(x) => match env.lookup(x)? {
                    Value::Map(p) => {
                        let base = Arc::new(FinSet::new(p.dom().pow(3).max(p.cod).max(1)));
                        eq_groupoid(&base, p).or_else(|e| sem(x.span, e.to_string()))?.precategory
                    }
                    Value::Functor(h) => return Ok(Value::Precategory(PrecategoryValue::FunctorKernel(h.functor.clone()))),
                    v => return sem(x.span, format!("`{}` is a {}, expected a map or a functor", x.text, v.kind())),
                },
            };
            let rep = validate_precategory(&pre);
            if !rep.is_ok() {
                return sem(d.span, rep.violations.join("; "));
            }
            Ok(Value::Precategory(PrecategoryValue::Sets(pre)))
        }
        DeclKind::Indexed(spec) => Ok(Value::Indexed(match spec {
            IndexedSpec::Slice { bound } => IndexedValue::Slice(BasicIndexed { bound: *bound, base_bound: 3 }),
            IndexedSpec::Fam { bound, of } => {
                IndexedValue::Fam(FamIndexed { x: env.category(of)?.cat.clone(), base_bound: *bound })
            }
            IndexedSpec::Diagrams { bound, shapes } => {
                let cats = shapes.iter().map(|s| env.category(s).map(|c| (*c.cat).clone())).collect::<Result<Vec<_>>>()?;
                IndexedValue::Diagrams(diagram_indexed_category(cats, *bound))
            }
        })),
        DeclKind::Pseudofunctor { indexed, precategory, twist } => {
            let ix = match env.lookup(indexed)? {
                Value::Indexed(ix) => ix,
                v => return sem(indexed.span, format!("`{}` is a {}, expected an indexed category", indexed.text, v.kind())),
            };
            let pre = match env.lookup(precategory)? {
                Value::Precategory(p) => p,
                v => return sem(precategory.span, format!("`{}` is a {}, expected a precategory", precategory.text, v.kind())),
            };
            let wrap = |e: Error| -> Error { Error::Semantic { line: d.span.line, col: d.span.col, message: e.to_string() } };
            let value = match (ix, pre) {
                (IndexedValue::Slice(f), PrecategoryValue::Sets(a)) => {
                    let t = compose_indexed_with_precategory(f, a).map_err(wrap)?;
                    PseudoValue::Slice(Arc::new(twist.map_or_else(|| t.clone(), |s| t.twist(s))))
                }
                (IndexedValue::Fam(f), PrecategoryValue::Sets(a)) => {
                    let t = compose_indexed_with_precategory(f, a).map_err(wrap)?;
                    PseudoValue::Fam(Arc::new(twist.map_or_else(|| t.clone(), |s| t.twist(s))))
                }
                (IndexedValue::Diagrams(f), PrecategoryValue::FunctorKernel(h)) => {
                    let g = eq_groupoid(&f.cats, h).map_err(wrap)?;
                    let t = compose_indexed_with_precategory(f, &g.precategory).map_err(wrap)?;
                    PseudoValue::Diagrams(Arc::new(twist.map_or_else(|| t.clone(), |s| t.twist(s))))
                }
                (IndexedValue::Diagrams(_), PrecategoryValue::Sets(_)) => {
                    return sem(
                        precategory.span,
                        format!("`{}` lives in finite sets but `{}` is indexed over categories", precategory.text, indexed.text),
                    )
                }
                (_, PrecategoryValue::FunctorKernel(_)) => {
                    return sem(
                        precategory.span,
                        format!("`{}` lives in categories but `{}` is indexed over finite sets", precategory.text, indexed.text),
                    )
                }
            };
            Ok(Value::Pseudofunctor(value))
        }
        DeclKind::Adjunction { right } => {
            let g = env.functor(right)?;
            match find_left_adjoint(&g.functor.to_functor()) {
                Some(adjunction) => Ok(Value::Adjunction { right: right.text.clone(), adjunction }),
                None => sem(right.span, format!("`{}` has no left adjoint", right.text)),
            }
        }
    }
}

fn load_category(d: &Decl, objects: &[Name], homs: &[HomDecl], compose: &[Product]) -> Result<NamedCategory> {
    unique(objects, "object")?;
    let obj = |n: &Name| -> Result<usize> {
        objects.iter().position(|o| o.text == n.text).ok_or(()).or_else(|_| sem(n.span, format!("unknown object `{}`", n.text)))
    };
    let mut names: Vec<Name> = objects.iter().map(|o| Name { text: format!("id_{}", o.text), span: o.span }).collect();
    let mut typing: Vec<(usize, usize)> = (0..objects.len()).map(|x| (x, x)).collect();
    for h in homs {
        let (a, b) = (obj(&h.dom)?, obj(&h.cod)?);
        for n in &h.names {
            names.push(n.clone());
            typing.push((a, b));
        }
    }
    unique(&names, "morphism")?;
    let m = names.len();
    let mor = |n: &Name| -> Result<usize> {
        names.iter().position(|o| o.text == n.text).ok_or(()).or_else(|_| sem(n.span, format!("unknown morphism `{}`", n.text)))
    };
    let mut table: Vec<Option<usize>> = vec![None; m * m];
    for f in 0..m {
        let (a, b) = typing[f];
        table[b * m + f] = Some(f);
        table[f * m + a] = Some(f);
    }
    for p in compose {
        let (g, f, h) = (mor(&p.left)?, mor(&p.right)?, mor(&p.result)?);
        if typing[f].1 != typing[g].0 {
            return sem(p.left.span, format!("`{}` and `{}` are not composable", p.left.text, p.right.text));
        }
        if typing[h] != (typing[f].0, typing[g].1) {
            return sem(p.result.span, format!("`{}` has the wrong domain or codomain for `{} . {}`", p.result.text, p.left.text, p.right.text));
        }
        match table[g * m + f] {
            Some(old) if old != h => {
                return sem(p.left.span, format!("`{} . {}` is already `{}`", p.left.text, p.right.text, names[old].text))
            }
            _ => table[g * m + f] = Some(h),
        }
    }
    let mut entries = Vec::new();
    for g in 0..m {
        for f in 0..m {
            if typing[f].1 != typing[g].0 {
                continue;
            }
            let h = match table[g * m + f] {
                Some(h) => h,
                None => {
                    // a unique candidate fills the gap
                    let cands: Vec<usize> = (0..m).filter(|&h| typing[h] == (typing[f].0, typing[g].1)).collect();
                    if cands.len() != 1 {
                        return sem(d.span, format!("the composite `{} . {}` is not given", names[g].text, names[f].text));
                    }
                    cands[0]
                }
            };
            entries.push((g, f, h));
        }
    }
    let ids: Vec<usize> = (0..objects.len()).collect();
    let cat = FinCategory::build(objects.len(), &typing, &ids, &entries).or_else(|e| sem(d.span, e.to_string()))?;
    Ok(NamedCategory {
        cat: Arc::new(cat),
        objects: objects.iter().map(|o| o.text.clone()).collect(),
        morphisms: names.into_iter().map(|n| n.text).collect(),
    })
}

/// The first element is the unit; unit laws complete the table.
fn load_monoid(d: &Decl, elements: &[Name], table: &[Product]) -> Result<Value> {
    unique(elements, "element")?;
    let n = elements.len();
    let el = |x: &Name| -> Result<usize> {
        elements.iter().position(|e| e.text == x.text).ok_or(()).or_else(|_| sem(x.span, format!("unknown element `{}`", x.text)))
    };
    let mut mul = vec![vec![None; n]; n];
    for x in 0..n {
        mul[0][x] = Some(x);
        mul[x][0] = Some(x);
    }
    for p in table {
        let (a, b, c) = (el(&p.left)?, el(&p.right)?, el(&p.result)?);
        match mul[a][b] {
            Some(old) if old != c => {
                return sem(p.left.span, format!("`{}.{}` is already `{}`", p.left.text, p.right.text, elements[old].text))
            }
            _ => mul[a][b] = Some(c),
        }
    }
    let mut full = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            full[a][b] = match mul[a][b] {
                Some(c) => c,
                None => return sem(d.span, format!("the product `{}.{}` is not given", elements[a].text, elements[b].text)),
            };
        }
    }
    let names: Vec<String> = elements.iter().map(|e| e.text.clone()).collect();
    let m = Monoid::new(names.clone(), full).or_else(|e| sem(d.span, e.to_string()))?;
    let cat = NamedCategory { cat: Arc::new(m.as_category()), objects: vec!["*".into()], morphisms: names };
    Ok(Value::Monoid(m, cat))
}

fn load_functor(d: &Decl, s: &NamedCategory, t: &NamedCategory, assign: &[(Name, Name)]) -> Result<FinFunctor> {
    let mut om = vec![None; s.objects.len()];
    let mut mm = vec![None; s.morphisms.len()];
    for (a, b) in assign {
        if let Some(x) = s.object(&a.text) {
            let y = t.object(&b.text).ok_or(()).or_else(|_| sem(b.span, format!("`{}` is not an object of the target", b.text)))?;
            if om[x].replace(y).is_some_and(|old| old != y) {
                return sem(a.span, format!("`{}` is assigned twice", a.text));
            }
        } else if let Some(f) = s.morphism(&a.text) {
            let g = t.morphism(&b.text).ok_or(()).or_else(|_| sem(b.span, format!("`{}` is not a morphism of the target", b.text)))?;
            if mm[f].replace(g).is_some_and(|old| old != g) {
                return sem(a.span, format!("`{}` is assigned twice", a.text));
            }
        } else {
            return sem(a.span, format!("`{}` is not an object or morphism of the source", a.text));
        }
    }
    let om: Vec<usize> = match om.iter().position(Option::is_none) {
        Some(x) => return sem(d.span, format!("object `{}` is not assigned", s.objects[x])),
        None => om.into_iter().flatten().collect(),
    };
    for x in 0..s.objects.len() {
        let i = s.cat.identity_of(x);
        let ti = t.cat.identity_of(om[x]);
        if mm[i].replace(ti).is_some_and(|old| old != ti) {
            return sem(d.span, format!("`{}` must go to an identity", s.morphisms[i]));
        }
    }
    let mm: Vec<usize> = match mm.iter().position(Option::is_none) {
        Some(f) => return sem(d.span, format!("morphism `{}` is not assigned", s.morphisms[f])),
        None => mm.into_iter().flatten().collect(),
    };
    let f = FinFunctor::new(s.cat.clone(), t.cat.clone(), om, mm).or_else(|e| sem(d.span, e.to_string()))?;
    let rep = check_functor(&f.to_functor());
    if !rep.is_ok() {
        return sem(d.span, format!("`{}` is not a functor: {}", d.name.text, rep.violations.join("; ")));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Category;

    fn semantic(text: &str) -> (usize, usize, String) {
        match load_str(text) {
            Err(Error::Semantic { line, col, message }) => (line, col, message),
            Err(e) => panic!("not semantic: {e}"),
            Ok(_) => panic!("loaded"),
        }
    }

    #[test]
    fn monoid_completion() {
        let env = load_str("monoid M2 { 1,e; e.e=e }").unwrap();
        match env.get("M2") {
            Some(Value::Monoid(m, c)) => {
                assert_eq!(m.size(), 2);
                assert_eq!(m.mul(1, 1), 1);
                assert_eq!(c.cat.morphism_count(), 2);
            }
            _ => panic!(),
        }
        let (_, _, msg) = semantic("monoid Z { 1,a,b; a.a=b }");
        assert!(msg.contains("not given"), "{msg}");
        assert!(load_str("monoid N { 1,a; a.a=1 }").is_ok());
    }

    #[test]
    fn categories_fill_unique_composites() {
        let env = load_str("category C { objects: a,b,c; hom(a,b): f; hom(b,c): g; hom(a,c): h; }").unwrap();
        match env.get("C") {
            Some(Value::Category(c)) => {
                assert_eq!(c.cat.morphism_count(), 6);
                let (f, g, h) = (c.morphism("f").unwrap(), c.morphism("g").unwrap(), c.morphism("h").unwrap());
                assert_eq!(c.cat.composite(g, f), Some(h));
            }
            _ => panic!(),
        }
        let (_, _, msg) = semantic("category P { objects: a,b; hom(a,b): f,g; hom(b,b): e; }");
        assert!(msg.contains("e . f"), "{msg}");
    }

    #[test]
    fn errors_carry_spans() {
        let (line, col, msg) = semantic("map p : [2] -> [1] = [0,0]\nprecategory K = kernel(q)");
        assert_eq!((line, col), (2, 24));
        assert!(msg.contains("unknown name"));
        let (_, _, msg) = semantic("map p : [2] -> [1] = [0]");
        assert!(msg.contains("1 images"));
        let (line, col, _) = semantic("map p : [1] -> [1] = [0]\nmap p : [1] -> [1] = [0]");
        assert_eq!((line, col), (2, 5));
        let (_, _, msg) = semantic("map p : [1] -> [1] = [0]\nfunctor F : p -> p { }");
        assert!(msg.contains("expected a category"));
    }

    #[test]
    fn functors_and_transformations() {
        let text = "category A { objects: x,y; hom(x,y): f; }\n\
                    category T { objects: t; }\n\
                    functor Bang : A -> T { x -> t; y -> t; f -> id_t; }\n\
                    functor Low : T -> A { t -> x; }\n\
                    functor High : T -> A { t -> y; }\n\
                    nattrans n : Low => High { t : f; }\n\
                    adjunction L = left_adjoint(Bang)";
        let env = load_str(text).unwrap();
        assert!(matches!(env.get("n"), Some(Value::NatTrans { .. })));
        match env.get("L") {
            Some(Value::Adjunction { adjunction, .. }) => assert_eq!(adjunction.left.ob(&0), 0),
            _ => panic!(),
        }
        let (_, _, msg) = semantic(
            "category A { objects: x,y; hom(x,y): f; }\nfunctor G : A -> A { x -> y; y -> x; f -> f; }",
        );
        assert!(msg.contains("not a functor"), "{msg}");
        let (_, _, msg) = semantic(
            "category A { objects: x,y; hom(x,y): f; }\nfunctor I : A -> A { x -> x; y -> y; f -> f; }\nnattrans b : I => I { x : f; y : id_y; }",
        );
        assert!(msg.contains("not natural") || msg.contains("not a morphism"), "{msg}");
    }

    #[test]
    fn pseudofunctors() {
        let text = "monoid M2 { 1,e; e.e=e }\n\
                    precategory P = sigma(M2)\n\
                    indexed S = slice(bound = 2)\n\
                    pseudofunctor A = S on P\n\
                    pseudofunctor B = S on P twist 3\n\
                    category T { objects: t; }\n\
                    category D { objects: a, b; }\n\
                    functor h : D -> T { a -> t; b -> t; }\n\
                    precategory K = kernel(h)\n\
                    indexed X = diagrams(bound = 1, shapes = [T, D])\n\
                    pseudofunctor C = X on K";
        let env = load_str(text).unwrap();
        match env.get("A") {
            Some(Value::Pseudofunctor(PseudoValue::Slice(t))) => assert_eq!(t.cat(1).objects().len(), Slice::new(2, 2).objects().len()),
            _ => panic!(),
        }
        assert!(matches!(env.get("C"), Some(Value::Pseudofunctor(PseudoValue::Diagrams(_)))));
        let (_, _, msg) = semantic(
            "monoid M2 { 1,e; e.e=e }\nprecategory P = sigma(M2)\ncategory T { objects: t; }\nindexed X = diagrams(bound = 1, shapes = [T])\npseudofunctor C = X on P",
        );
        assert!(msg.contains("indexed over categories"));
    }
}
