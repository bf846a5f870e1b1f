//! Parsing of case parameters, `τ` specs and weight lists.

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use multfree_core::metaplectic::Layout;
use multfree_core::{Block, CaseId, CaseSpec, Family, IrrepLabel, TauSpec};

/// Case selection shared by `classify` and `series`.
#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    /// Case of the classification: I, II, ..., IX.
    #[arg(value_parser = parse_case)]
    pub case: CaseId,

    /// n for cases I, III, IV, V, VI, VII, IX.
    #[arg(long)]
    pub n: Option<u32>,

    /// k for case VII.
    #[arg(long)]
    pub k: Option<u32>,

    /// k1 for case II.
    #[arg(long)]
    pub k1: Option<u32>,

    /// k2 for case II.
    #[arg(long)]
    pub k2: Option<u32>,

    /// Case VIII: sizes m_i of the SU(m_i) blocks, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u32>,

    /// Case VIII: su(2) blocks as k:n, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_block)]
    pub blocks: Vec<Block>,

    /// Irreducible τ, as comma-separated `factor=weights` groups; unnamed factors are trivial.
    ///
    /// Factor names by case: I su2,sp; II su2a,su2b,sp1,sp2; III sp2,sp; IV so;
    /// V/VI su,s1; VII su2,u,sp; VIII su_i,su2_j,s1_i,u_j,sp_j; IX u.
    /// Example: `su2=1,sp=2,1` is ν_1 ⊗ η_(2,1). U(k) and SO(2n) weights are padded with zeros.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
}

pub fn parse_case(s: &str) -> Result<CaseId, String> {
    CaseId::parse(s).ok_or_else(|| format!("unknown case {s:?}; expected one of I..IX"))
}

pub fn parse_block(s: &str) -> Result<Block, String> {
    let (k, n) = s.split_once(':').ok_or_else(|| format!("block {s:?} must look like k:n"))?;
    let k = k.trim().parse().map_err(|_| format!("bad k in block {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad n in block {s:?}"))?;
    Ok(Block { k, n })
}

fn need(v: Option<u32>, name: &str, case: CaseId) -> Result<u32> {
    v.ok_or_else(|| anyhow!("case {case} needs --{name}"))
}

impl CaseArgs {
    pub fn spec(&self) -> Result<CaseSpec> {
        let c = self.case;
        let spec = match c {
            CaseId::I => CaseSpec::I { n: need(self.n, "n", c)? },
            CaseId::II => CaseSpec::II { k1: self.k1.unwrap_or(0), k2: self.k2.unwrap_or(0) },
            CaseId::III => CaseSpec::III { n: need(self.n, "n", c)? },
            CaseId::IV => CaseSpec::IV { n: need(self.n, "n", c)? },
            CaseId::V => CaseSpec::V { n: need(self.n, "n", c)? },
            CaseId::VI => CaseSpec::VI { n: need(self.n, "n", c)? },
            CaseId::VII => CaseSpec::VII { k: need(self.k, "k", c)?, n: self.n.unwrap_or(0) },
            CaseId::VIII => CaseSpec::VIII { m: self.m.clone(), blocks: self.blocks.clone() },
            CaseId::IX => CaseSpec::IX { n: need(self.n, "n", c)? },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tau(&self, spec: &CaseSpec) -> Result<TauSpec> {
        match &self.tau {
            None => Ok(TauSpec::trivial(spec)?),
            Some(s) => parse_tau(spec, s),
        }
    }
}

/// Integers separated by commas and/or whitespace.
pub fn parse_ints(s: &str) -> Result<Vec<i32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().with_context(|| format!("not an integer: {t:?}")))
        .collect()
}

/// A label of `(family, rank)`; `U` and `SO` weights are padded with zeros.
pub fn make_label(family: Family, rank: u32, mut weight: Vec<i32>) -> Result<IrrepLabel> {
    let full = match family {
        Family::U => rank as usize,
        Family::SO => rank as usize / 2,
        _ => 0,
    };
    if weight.len() < full {
        weight.resize(full, 0);
    }
    Ok(IrrepLabel::new(family, rank, weight)?)
}

/// `name=w,w,name=w,...`: a token containing `=` starts a new factor.
pub fn parse_tau(spec: &CaseSpec, s: &str) -> Result<TauSpec> {
    let layout: Layout = spec.layout()?;
    let mut groups: Vec<(String, Vec<i32>)> = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((name, first)) = token.split_once('=') {
            groups.push((name.trim().to_string(), parse_ints(first)?));
        } else {
            let Some(last) = groups.last_mut() else {
                bail!("τ spec must start with factor=weights, got {token:?}");
            };
            last.1.extend(parse_ints(token)?);
        }
    }
    let mut assignments = Vec::new();
    for (name, weight) in groups {
        let f = layout.factors.iter().find(|f| f.name == name).ok_or_else(|| {
            let names: Vec<&str> = layout.factors.iter().map(|f| f.name.as_str()).collect();
            anyhow!("case {} has no factor {name:?}; factors are {}", spec.id(), names.join(", "))
        })?;
        assignments.push((f.name.clone(), make_label(f.family, f.rank, weight)?));
    }
    let refs: Vec<(&str, IrrepLabel)> = assignments.iter().map(|(n, l)| (n.as_str(), l.clone())).collect();
    Ok(TauSpec::with(spec, &refs)?)
}
