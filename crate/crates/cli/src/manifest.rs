//! Suite manifest parsing.
//!
//! One case per line: `<spec1> <spec2> <g> <method> <budget>`. Specs are
//! family DSL strings or `-` for methods that take no graph (sweep,
//! vertexbound). The budget is a plain integer or `-` for the method default;
//! its meaning depends on the method (search node budget, oracle work
//! guard, PMC sample count, sweep degree range). Blank lines and `#`
//! comments are ignored.

use anyhow::{bail, Context, Result};

use xconn_core::family::FamilySpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseMethod {
    /// Plain connectivity of the strong product vs k₁k₂+k₁+k₂.
    Kappa0,
    /// Exhaustive subset oracle vs the closed form.
    Oracle,
    /// Branch-and-bound vs the closed form.
    Search,
    /// Oracle and search, which must also agree with each other.
    Both,
    /// Constructed layer-path/block cuts vs the per-shape minimum terms.
    Gadget,
    /// PMC witness pair, preconditions, and sampled refutation.
    Pmc,
    /// Arithmetic identity/symmetry sweep over the closed forms.
    Sweep,
    /// Catalog vertex-count lower bound check.
    VertexBound,
}

impl CaseMethod {
    pub fn parse(token: &str) -> Result<Self> {
        Ok(match token {
            "kappa0" => CaseMethod::Kappa0,
            "oracle" => CaseMethod::Oracle,
            "search" => CaseMethod::Search,
            "both" => CaseMethod::Both,
            "gadget" => CaseMethod::Gadget,
            "pmc" => CaseMethod::Pmc,
            "sweep" => CaseMethod::Sweep,
            "vertexbound" => CaseMethod::VertexBound,
            other => bail!("unknown method {other:?}"),
        })
    }

    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            CaseMethod::Kappa0 => "kappa0",
            CaseMethod::Oracle => "oracle",
            CaseMethod::Search => "search",
            CaseMethod::Both => "both",
            CaseMethod::Gadget => "gadget",
            CaseMethod::Pmc => "pmc",
            CaseMethod::Sweep => "sweep",
            CaseMethod::VertexBound => "vertexbound",
        }
    }

    /// Whether the method operates on a product of two named factors.
    #[must_use]
    pub fn needs_specs(self) -> bool {
        !matches!(self, CaseMethod::Sweep | CaseMethod::VertexBound)
    }
}

/// One parsed manifest line.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub spec1: Option<String>,
    pub spec2: Option<String>,
    pub g: usize,
    pub method: CaseMethod,
    pub budget: Option<u64>,
}

impl CaseSpec {
    /// Display value for the factor columns (`-` when absent).
    #[must_use]
    pub fn factor1(&self) -> &str {
        self.spec1.as_deref().unwrap_or("-")
    }

    #[must_use]
    pub fn factor2(&self) -> &str {
        self.spec2.as_deref().unwrap_or("-")
    }
}

fn parse_spec_token(token: &str) -> Result<Option<String>> {
    if token == "-" {
        return Ok(None);
    }
    let spec: FamilySpec = token
        .parse()
        .with_context(|| format!("bad family spec {token:?}"))?;
    Ok(Some(spec.to_string()))
}

pub fn parse_manifest(text: &str) -> Result<Vec<CaseSpec>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let context = || format!("manifest line {}: {line:?}", idx + 1);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 {
            bail!(
                "{}: expected 5 fields `<spec1> <spec2> <g> <method> <budget>`",
                context()
            );
        }
        let spec1 = parse_spec_token(tokens[0]).with_context(context)?;
        let spec2 = parse_spec_token(tokens[1]).with_context(context)?;
        let g: usize = tokens[2]
            .parse()
            .with_context(|| format!("{}: bad g", context()))?;
        if g > 3 {
            bail!("{}: g must be in 0..=3, got {g}", context());
        }
        let method = CaseMethod::parse(tokens[3]).with_context(context)?;
        let budget = if tokens[4] == "-" {
            None
        } else {
            Some(
                tokens[4]
                    .parse::<u64>()
                    .with_context(|| format!("{}: bad budget", context()))?,
            )
        };
        if method.needs_specs() && (spec1.is_none() || spec2.is_none()) {
            bail!(
                "{}: method {} needs two factor specs",
                context(),
                method.label()
            );
        }
        if !method.needs_specs() && (spec1.is_some() || spec2.is_some()) {
            bail!(
                "{}: method {} takes `-` placeholders, not specs",
                context(),
                method.label()
            );
        }
        out.push(CaseSpec {
            spec1,
            spec2,
            g,
            method,
            budget,
        });
    }
    Ok(out)
}
