use super::lexer::Span;

/// An identifier or numeral used as a name, with where it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Self {
        Name { text: text.into(), span: Span::default() }
    }
}

/// `hom(a, b): f, g;`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDecl {
    pub dom: Name,
    pub cod: Name,
    pub names: Vec<Name>,
}

/// `g . f = h`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub left: Name,
    pub right: Name,
    pub result: Name,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreSpec {
    Sigma(Name),
    Nerve(Name),
    /// `Eq(x)` for a map or a functor `x`.
    Kernel(Name),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexedSpec {
    Slice { bound: usize },
    Diagrams { bound: usize, shapes: Vec<Name> },
    Fam { bound: usize, of: Name },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Category { objects: Vec<Name>, homs: Vec<HomDecl>, compose: Vec<Product> },
    Map { dom: usize, cod: usize, image: Vec<usize> },
    Monoid { elements: Vec<Name>, table: Vec<Product> },
    Functor { source: Name, target: Name, assign: Vec<(Name, Name)> },
    NatTrans { source: Name, target: Name, components: Vec<(Name, Name)> },
    Precategory(PreSpec),
    Indexed(IndexedSpec),
    Pseudofunctor { indexed: Name, precategory: Name, twist: Option<u64> },
    Adjunction { right: Name },
}

impl DeclKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            DeclKind::Category { .. } => "category",
            DeclKind::Map { .. } => "map",
            DeclKind::Monoid { .. } => "monoid",
            DeclKind::Functor { .. } => "functor",
            DeclKind::NatTrans { .. } => "nattrans",
            DeclKind::Precategory(_) => "precategory",
            DeclKind::Indexed(_) => "indexed",
            DeclKind::Pseudofunctor { .. } => "pseudofunctor",
            DeclKind::Adjunction { .. } => "adjunction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub name: Name,
    pub kind: DeclKind,
    pub span: Span,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub decls: Vec<Decl>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Decl> {
        self.decls.iter().find(|d| d.name.text == name)
    }

    /// The same document with every span reset, for structural comparison.
    pub fn without_spans(&self) -> Document {
        let mut d = self.clone();
        let z = Span::default();
        let clear = |n: &mut Name| n.span = z;
        let clear_product = |p: &mut Product| {
            clear(&mut p.left);
            clear(&mut p.right);
            clear(&mut p.result);
        };
        for decl in &mut d.decls {
            decl.span = z;
            clear(&mut decl.name);
            match &mut decl.kind {
                DeclKind::Category { objects, homs, compose } => {
                    objects.iter_mut().for_each(clear);
                    for h in homs {
                        clear(&mut h.dom);
                        clear(&mut h.cod);
                        h.names.iter_mut().for_each(clear);
                    }
                    compose.iter_mut().for_each(clear_product);
                }
                DeclKind::Map { .. } => {}
                DeclKind::Monoid { elements, table } => {
                    elements.iter_mut().for_each(clear);
                    table.iter_mut().for_each(clear_product);
                }
                DeclKind::Functor { source, target, assign: pairs }
                | DeclKind::NatTrans { source, target, components: pairs } => {
                    clear(source);
                    clear(target);
                    for (a, b) in pairs {
                        clear(a);
                        clear(b);
                    }
                }
                DeclKind::Precategory(PreSpec::Sigma(n) | PreSpec::Nerve(n) | PreSpec::Kernel(n)) => clear(n),
                DeclKind::Indexed(IndexedSpec::Slice { .. }) => {}
                DeclKind::Indexed(IndexedSpec::Diagrams { shapes, .. }) => shapes.iter_mut().for_each(clear),
                DeclKind::Indexed(IndexedSpec::Fam { of, .. }) => clear(of),
                DeclKind::Pseudofunctor { indexed, precategory, .. } => {
                    clear(indexed);
                    clear(precategory);
                }
                DeclKind::Adjunction { right } => clear(right),
            }
        }
        d
    }
}
