//! Recursive descent over the token stream, one token of lookahead.

use super::ast::*;
use super::lexer::{lex, Span, Tok, Token};
use crate::error::{Error, Result};

pub const KEYWORDS: [&str; 9] =
    ["category", "map", "monoid", "functor", "nattrans", "precategory", "indexed", "pseudofunctor", "adjunction"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn quoted(s: &str) -> String {
    format!("`{s}`")
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            line: t.span.line,
            col: t.span.col,
            message: format!("unexpected {}", t.tok.describe()),
            expected,
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<Span> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            self.fail(vec![quoted(tok.text())])
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> Result<Span> {
        if self.at_keyword(kw) {
            Ok(self.bump().span)
        } else {
            self.fail(vec![quoted(kw)])
        }
    }

    fn one_of(&mut self, kws: &[&str]) -> Result<(String, Span)> {
        for kw in kws {
            if self.at_keyword(kw) {
                return Ok((kw.to_string(), self.bump().span));
            }
        }
        self.fail(kws.iter().map(|k| quoted(k)).collect())
    }

    /// Identifiers and numerals both serve as names.
    fn name(&mut self) -> Result<Name> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.bump();
                Ok(Name { text: s, span: t.span })
            }
            Tok::Nat(n) => {
                self.bump();
                Ok(Name { text: n.to_string(), span: t.span })
            }
            _ => self.fail(vec!["an identifier".into()]),
        }
    }

    fn nat(&mut self) -> Result<usize> {
        match self.peek().tok {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(vec!["a natural number".into()]),
        }
    }

    fn names(&mut self) -> Result<Vec<Name>> {
        let mut out = vec![self.name()?];
        while self.peek().tok == Tok::Comma {
            self.bump();
            out.push(self.name()?);
        }
        Ok(out)
    }

    fn nats(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if matches!(self.peek().tok, Tok::Nat(_)) {
            out.push(self.nat()?);
            while self.peek().tok == Tok::Comma {
                self.bump();
                out.push(self.nat()?);
            }
        }
        Ok(out)
    }

    fn product(&mut self) -> Result<Product> {
        let left = self.name()?;
        self.expect(Tok::Dot)?;
        let right = self.name()?;
        self.expect(Tok::Eq)?;
        let result = self.name()?;
        Ok(Product { left, right, result })
    }

    fn set_size(&mut self) -> Result<usize> {
        self.expect(Tok::LBracket)?;
        let n = self.nat()?;
        self.expect(Tok::RBracket)?;
        Ok(n)
    }

    fn document(&mut self) -> Result<Document> {
        let mut decls = Vec::new();
        while self.peek().tok != Tok::Eof {
            decls.push(self.decl()?);
        }
        Ok(Document { decls })
    }

    fn decl(&mut self) -> Result<Decl> {
        let span = self.peek().span;
        let (kw, _) = self.one_of(&KEYWORDS)?;
        let name = self.name()?;
        let kind = match kw.as_str() {
            "category" => self.category()?,
            "map" => {
                self.expect(Tok::Colon)?;
                let dom = self.set_size()?;
                self.expect(Tok::Arrow)?;
                let cod = self.set_size()?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBracket)?;
                let image = self.nats()?;
                if self.peek().tok != Tok::RBracket {
                    return self.fail(vec![quoted("]"), quoted(",")]);
                }
                self.bump();
                DeclKind::Map { dom, cod, image }
            }
            "monoid" => self.monoid()?,
            "functor" => {
                self.expect(Tok::Colon)?;
                let source = self.name()?;
                self.expect(Tok::Arrow)?;
                let target = self.name()?;
                let assign = self.table(Tok::Arrow)?;
                DeclKind::Functor { source, target, assign }
            }
            "nattrans" => {
                self.expect(Tok::Colon)?;
                let source = self.name()?;
                self.expect(Tok::DArrow)?;
                let target = self.name()?;
                let components = self.table(Tok::Colon)?;
                DeclKind::NatTrans { source, target, components }
            }
            "precategory" => {
                self.expect(Tok::Eq)?;
                let (k, _) = self.one_of(&["sigma", "nerve", "kernel"])?;
                self.expect(Tok::LParen)?;
                let arg = self.name()?;
                self.expect(Tok::RParen)?;
                DeclKind::Precategory(match k.as_str() {
                    "sigma" => PreSpec::Sigma(arg),
                    "nerve" => PreSpec::Nerve(arg),
                    _ => PreSpec::Kernel(arg),
                })
            }
            "indexed" => self.indexed()?,
            "pseudofunctor" => {
                self.expect(Tok::Eq)?;
                let indexed = self.name()?;
                self.keyword("on")?;
                let precategory = self.name()?;
                let twist = if self.at_keyword("twist") {
                    self.bump();
                    Some(self.nat()? as u64)
                } else {
                    None
                };
                DeclKind::Pseudofunctor { indexed, precategory, twist }
            }
            _ => {
                self.expect(Tok::Eq)?;
                self.keyword("left_adjoint")?;
                self.expect(Tok::LParen)?;
                let right = self.name()?;
                self.expect(Tok::RParen)?;
                DeclKind::Adjunction { right }
            }
        };
        Ok(Decl { name, kind, span })
    }

    fn category(&mut self) -> Result<DeclKind> {
        self.expect(Tok::LBrace)?;
        self.keyword("objects")?;
        self.expect(Tok::Colon)?;
        let objects = self.names()?;
        self.expect(Tok::Semi)?;
        let mut homs = Vec::new();
        while self.at_keyword("hom") {
            self.bump();
            self.expect(Tok::LParen)?;
            let dom = self.name()?;
            self.expect(Tok::Comma)?;
            let cod = self.name()?;
            self.expect(Tok::RParen)?;
            self.expect(Tok::Colon)?;
            let names = self.names()?;
            self.expect(Tok::Semi)?;
            homs.push(HomDecl { dom, cod, names });
        }
        let mut compose = Vec::new();
        while self.at_keyword("compose") {
            self.bump();
            self.expect(Tok::Colon)?;
            compose.push(self.product()?);
            self.expect(Tok::Semi)?;
        }
        if self.peek().tok != Tok::RBrace {
            let mut exp = vec![quoted("}"), quoted("compose")];
            if compose.is_empty() {
                exp.push(quoted("hom"));
            }
            return self.fail(exp);
        }
        self.bump();
        Ok(DeclKind::Category { objects, homs, compose })
    }

    fn monoid(&mut self) -> Result<DeclKind> {
        self.expect(Tok::LBrace)?;
        let elements = self.names()?;
        self.expect(Tok::Semi)?;
        let mut table = Vec::new();
        while self.peek().tok != Tok::RBrace {
            table.push(self.product()?);
            match self.peek().tok {
                Tok::Semi => {
                    self.bump();
                }
                Tok::RBrace => {}
                _ => return self.fail(vec![quoted(";"), quoted("}")]),
            }
        }
        self.bump();
        Ok(DeclKind::Monoid { elements, table })
    }

    fn table(&mut self, sep: Tok) -> Result<Vec<(Name, Name)>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        while self.peek().tok != Tok::RBrace {
            if !matches!(self.peek().tok, Tok::Ident(_) | Tok::Nat(_)) {
                return self.fail(vec!["an identifier".into(), quoted("}")]);
            }
            let a = self.name()?;
            self.expect(sep.clone())?;
            let b = self.name()?;
            self.expect(Tok::Semi)?;
            out.push((a, b));
        }
        self.bump();
        Ok(out)
    }

    fn indexed(&mut self) -> Result<DeclKind> {
        self.expect(Tok::Eq)?;
        let (k, _) = self.one_of(&["slice", "diagrams", "fam"])?;
        self.expect(Tok::LParen)?;
        self.keyword("bound")?;
        self.expect(Tok::Eq)?;
        let bound = self.nat()?;
        let spec = match k.as_str() {
            "slice" => IndexedSpec::Slice { bound },
            "diagrams" => {
                self.expect(Tok::Comma)?;
                self.keyword("shapes")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBracket)?;
                let shapes = self.names()?;
                self.expect(Tok::RBracket)?;
                IndexedSpec::Diagrams { bound, shapes }
            }
            _ => {
                self.expect(Tok::Comma)?;
                self.keyword("of")?;
                self.expect(Tok::Eq)?;
                IndexedSpec::Fam { bound, of: self.name()? }
            }
        };
        self.expect(Tok::RParen)?;
        Ok(DeclKind::Indexed(spec))
    }
}

/// Parses a whole document.
pub fn parse(text: &str) -> Result<Document> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.document()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax_at(text: &str) -> (usize, usize, Vec<String>) {
        match parse(text).unwrap_err() {
            Error::Syntax { line, col, expected, .. } => (line, col, expected),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn map_declaration() {
        let d = parse("map p : [2] -> [1] = [0,0]").unwrap();
        assert_eq!(d.decls[0].kind, DeclKind::Map { dom: 2, cod: 1, image: vec![0, 0] });
    }

    #[test]
    fn monoid_declaration() {
        let d = parse("monoid M2 { 1,e; e.e=e }").unwrap();
        match &d.decls[0].kind {
            DeclKind::Monoid { elements, table } => {
                assert_eq!(elements.len(), 2);
                assert_eq!(table.len(), 1);
            }
            k => panic!("{k:?}"),
        }
    }

    #[test]
    fn category_with_everything() {
        let text = "category C {\n  objects: a, b, c;\n  hom(a, b): f;\n  hom(b, c): g;\n  hom(a, c): h;\n  compose: g . f = h;\n}";
        let d = parse(text).unwrap();
        match &d.decls[0].kind {
            DeclKind::Category { objects, homs, compose } => {
                assert_eq!((objects.len(), homs.len(), compose.len()), (3, 3, 1));
                assert_eq!((compose[0].left.span.line, compose[0].left.span.col), (6, 12));
            }
            k => panic!("{k:?}"),
        }
    }

    #[test]
    fn dot_equals_is_rejected() {
        let (line, col, expected) = syntax_at("category C { objects: a; hom(a,a): f; compose: f . = g; }");
        assert_eq!((line, col), (1, 52));
        assert_eq!(expected, vec!["an identifier".to_string()]);
    }

    #[test]
    fn trailing_commas_are_rejected() {
        let (_, col, _) = syntax_at("category C { objects: a, b,; }");
        assert_eq!(col, 28);
        assert!(parse("map p : [2] -> [1] = [0,0,]").is_err());
        assert!(parse("monoid M { 1, ; }").is_err());
        assert!(parse("indexed D = diagrams(bound = 1, shapes = [C,])").is_err());
    }

    #[test]
    fn expected_sets() {
        let (_, _, e) = syntax_at("widget W");
        assert_eq!(e.len(), KEYWORDS.len());
        let (_, _, e) = syntax_at("category C { objects: a; foo }");
        assert_eq!(e, vec!["`}`", "`compose`", "`hom`"]);
        let (line, col, _) = syntax_at("map p : [2] -> [1] = [0,0");
        assert_eq!((line, col), (1, 26));
    }

    #[test]
    fn remaining_forms() {
        let text = "functor F : C -> D { a -> x; f -> u; }\n\
                    nattrans t : F => G { a : u; }\n\
                    precategory P = sigma(M2)\n\
                    precategory N = nerve(C)\n\
                    precategory K = kernel(p)\n\
                    indexed S = slice(bound = 3)\n\
                    indexed X = fam(bound = 2, of = C)\n\
                    indexed D = diagrams(bound = 2, shapes = [C, T])\n\
                    pseudofunctor A = S on P twist 7\n\
                    pseudofunctor B = S on N\n\
                    adjunction L = left_adjoint(F)";
        let d = parse(text).unwrap();
        let kws: Vec<&str> = d.decls.iter().map(|d| d.kind.keyword()).collect();
        assert_eq!(
            kws,
            [
                "functor",
                "nattrans",
                "precategory",
                "precategory",
                "precategory",
                "indexed",
                "indexed",
                "indexed",
                "pseudofunctor",
                "pseudofunctor",
                "adjunction"
            ]
        );
        assert_eq!(
            d.without_spans().decls[8].kind,
            DeclKind::Pseudofunctor { indexed: Name::new("S"), precategory: Name::new("P"), twist: Some(7) }
        );
    }
}
