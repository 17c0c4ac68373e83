//! Family DSL: text specs for the graph catalog.
//!
//! Grammar: `cycle:<m>`, `path:<m>`, `complete:<m>`, `petersen`, `heawood`,
//! `mcgee`, `strong(<spec>,<spec>)`, `cartesian(<spec>,<spec>)`. Products
//! nest. Whitespace around tokens is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{complete, cycle, path, Graph};
use crate::named::{heawood, mcgee, petersen};
use crate::product::{cartesian_product, strong_product, ProductGraph, ProductKind};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Petersen,
    Heawood,
    Mcgee,
    Product(ProductKind, Box<FamilySpec>, Box<FamilySpec>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(m) => write!(f, "cycle:{m}"),
            FamilySpec::Path(m) => write!(f, "path:{m}"),
            FamilySpec::Complete(m) => write!(f, "complete:{m}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Heawood => write!(f, "heawood"),
            FamilySpec::Mcgee => write!(f, "mcgee"),
            FamilySpec::Product(kind, a, b) => write!(f, "{}({a},{b})", kind.label()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::FamilySyntax(format!(
                "expected {c:?} at offset {} in {:?}",
                self.pos, self.src
            )))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::FamilySyntax(format!(
                "expected a name at offset {start} in {:?}",
                self.src
            )));
        }
        Ok(&self.src[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| {
            Error::FamilySyntax(format!(
                "expected a number at offset {start} in {:?}",
                self.src
            ))
        })
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.word()?;
        match name {
            "cycle" | "path" | "complete" => {
                self.eat(':')?;
                let m = self.number()?;
                Ok(match name {
                    "cycle" => FamilySpec::Cycle(m),
                    "path" => FamilySpec::Path(m),
                    _ => FamilySpec::Complete(m),
                })
            }
            "petersen" => Ok(FamilySpec::Petersen),
            "heawood" => Ok(FamilySpec::Heawood),
            "mcgee" => Ok(FamilySpec::Mcgee),
            "strong" | "cartesian" => {
                let kind = if name == "strong" {
                    ProductKind::Strong
                } else {
                    ProductKind::Cartesian
                };
                self.eat('(')?;
                let a = self.spec()?;
                self.eat(',')?;
                let b = self.spec()?;
                self.eat(')')?;
                Ok(FamilySpec::Product(kind, Box::new(a), Box::new(b)))
            }
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(Error::FamilySyntax(format!(
                "trailing input at offset {} in {:?}",
                self.pos, self.src
            )))
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let spec = p.spec()?;
        p.finish()?;
        Ok(spec)
    }
}

/// A generated graph; products keep their factor structure.
#[derive(Clone, Debug)]
pub enum GeneratedGraph {
    Simple(Graph),
    Product(ProductGraph),
}

impl GeneratedGraph {
    #[must_use]
    pub fn graph(&self) -> &Graph {
        match self {
            GeneratedGraph::Simple(g) => g,
            GeneratedGraph::Product(p) => p.graph(),
        }
    }

    #[must_use]
    pub fn into_graph(self) -> Graph {
        match self {
            GeneratedGraph::Simple(g) => g,
            GeneratedGraph::Product(p) => p.into_graph(),
        }
    }

    #[must_use]
    pub fn as_product(&self) -> Option<&ProductGraph> {
        match self {
            GeneratedGraph::Product(p) => Some(p),
            GeneratedGraph::Simple(_) => None,
        }
    }
}

impl FamilySpec {
    /// Instantiates the spec; the graph's name is the canonical spec string.
    pub fn build(&self) -> Result<GeneratedGraph> {
        match self {
            FamilySpec::Cycle(m) => Ok(GeneratedGraph::Simple(cycle(*m)?)),
            FamilySpec::Path(m) => Ok(GeneratedGraph::Simple(path(*m)?)),
            FamilySpec::Complete(m) => Ok(GeneratedGraph::Simple(complete(*m)?)),
            FamilySpec::Petersen => Ok(GeneratedGraph::Simple(petersen())),
            FamilySpec::Heawood => Ok(GeneratedGraph::Simple(heawood())),
            FamilySpec::Mcgee => Ok(GeneratedGraph::Simple(mcgee())),
            FamilySpec::Product(kind, a, b) => {
                let ga = a.build()?.into_graph();
                let gb = b.build()?.into_graph();
                let p = match kind {
                    ProductKind::Strong => strong_product(&ga, &gb),
                    ProductKind::Cartesian => cartesian_product(&ga, &gb),
                };
                Ok(GeneratedGraph::Product(p))
            }
        }
    }
}

/// Parses and instantiates a family spec, returning the plain graph.
pub fn generate(spec: &str) -> Result<Graph> {
    Ok(generate_full(spec)?.into_graph())
}

/// Parses and instantiates a family spec, keeping product structure.
pub fn generate_full(spec: &str) -> Result<GeneratedGraph> {
    spec.parse::<FamilySpec>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds_basics() {
        let g = generate("cycle:5").unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        assert_eq!(g.name(), Some("cycle:5"));

        let g = generate("petersen").unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));

        let g = generate("mcgee").unwrap();
        assert_eq!((g.n(), g.m()), (24, 36));
    }

    #[test]
    fn parses_products_and_nesting() {
        let g = generate_full("strong(cycle:5, cycle:5)").unwrap();
        let p = g.as_product().unwrap();
        assert_eq!(p.graph().n(), 25);
        assert_eq!(p.factor_names(), ("cycle:5", "cycle:5"));
        assert_eq!(p.graph().name(), Some("strong(cycle:5,cycle:5)"));

        let nested = generate("cartesian(strong(path:2,path:2),cycle:3)").unwrap();
        assert_eq!(nested.n(), 12);
    }

    #[test]
    fn canonical_display_round_trips() {
        for s in [
            "cycle:9",
            "strong(heawood,mcgee)",
            "cartesian(cycle:4,strong(path:3,complete:3))",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let again: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(again, spec);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            generate("hypercube:3"),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            generate("cycle:2"),
            Err(Error::BadFamilyParameter(_))
        ));
        assert!(matches!(generate("cycle"), Err(Error::FamilySyntax(_))));
        assert!(matches!(
            generate("strong(cycle:3"),
            Err(Error::FamilySyntax(_))
        ));
        assert!(matches!(
            generate("cycle:5 extra"),
            Err(Error::FamilySyntax(_))
        ));
        assert!(matches!(generate(""), Err(Error::FamilySyntax(_))));
    }
}
