//! The JSON report (`"schema": 1`) and its text rendering.
//!
//! Polynomials are stored as canonical strings in the syntax of the input
//! files, so every field can be parsed back with the declared variables.
//! See `SCHEMA.md` next to this crate for the field reference.

use std::collections::BTreeMap;
use std::fmt::Write;

use realtri::{
    LazyOutput, Polynomial, Rational, RegularChain, RegularSAS, SamplePoint, SemiAlgebraicSystem, SignAtom,
    SignFormula, VarOrder,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Lazy,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub poly: String,
    /// `1` for `poly > 0`, `-1` for `poly < 0`.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Formula {
    /// Disjunction of conjunctions; `[[]]` is true and `[]` is false.
    pub clauses: Vec<Vec<Atom>>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub formula: Formula,
    /// Regular chain, ascending main variable.
    pub chain: Vec<String>,
    pub positive: Vec<String>,
    /// Free variable name to rational value (`"n"` or `"n/d"`).
    pub witness: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct System {
    pub eq: Vec<String>,
    pub ge: Vec<String>,
    pub gt: Vec<String>,
    pub ne: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: u32,
    pub mode: Mode,
    /// `true` when the deferred systems of a lazy run were resolved.
    pub evaluated: bool,
    /// Greatest first.
    pub variables: Vec<String>,
    pub input: System,
    pub components: Vec<Component>,
    pub deferred: Vec<System>,
    /// Wall clock in milliseconds; ignored by golden comparisons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

fn poly_strings(v: &[Polynomial], o: &VarOrder) -> Vec<String> {
    v.iter().map(|p| p.to_string_with(o)).collect()
}

pub fn encode_system(s: &SemiAlgebraicSystem) -> System {
    let o = &s.order;
    System {
        eq: poly_strings(&s.f, o),
        ge: poly_strings(&s.n, o),
        gt: poly_strings(&s.p, o),
        ne: poly_strings(&s.h, o),
    }
}

pub fn encode_component(c: &RegularSAS, o: &VarOrder) -> Component {
    let clauses =
        c.q.clauses()
            .iter()
            .map(|cl| cl.iter().map(|a| Atom { poly: a.poly.to_string_with(o), sign: a.sign }).collect())
            .collect();
    let witness =
        c.witness.vars.iter().zip(&c.witness.coords).map(|(&v, x)| (o.name(v).to_string(), x.to_string())).collect();
    Component {
        formula: Formula { clauses, text: c.q.display(o).to_string() },
        chain: poly_strings(c.t.polys(), o),
        positive: poly_strings(&c.p, o),
        witness,
    }
}

impl Document {
    fn new(s: &SemiAlgebraicSystem, mode: Mode, evaluated: bool) -> Self {
        Document {
            schema: SCHEMA_VERSION,
            mode,
            evaluated,
            variables: s.order.names().iter().rev().cloned().collect(),
            input: encode_system(s),
            components: Vec::new(),
            deferred: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn from_lazy(s: &SemiAlgebraicSystem, lazy: &LazyOutput) -> Self {
        let mut d = Document::new(s, Mode::Lazy, false);
        d.components = lazy.components.iter().map(|c| encode_component(c, &s.order)).collect();
        d.deferred = lazy.deferred.iter().map(encode_system).collect();
        d
    }

    pub fn from_full(s: &SemiAlgebraicSystem, mode: Mode, out: &[RegularSAS]) -> Self {
        let mut d = Document::new(s, mode, mode == Mode::Lazy);
        d.components = out.iter().map(|c| encode_component(c, &s.order)).collect();
        d
    }

    pub fn order(&self) -> Result<VarOrder, String> {
        VarOrder::from_greatest_first(self.variables.iter().cloned()).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let d: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if d.schema != SCHEMA_VERSION {
            return Err(format!("unsupported schema {}", d.schema));
        }
        Ok(d)
    }

    /// The document without timing, for golden comparisons.
    pub fn untimed(&self) -> Self {
        Document { elapsed_ms: None, ..self.clone() }
    }

    /// Rebuilds the solver objects described by the document.
    pub fn decode(&self) -> Result<Decoded, String> {
        let o = self.order()?;
        let system = decode_system(&self.input, &o)?;
        let components = self.components.iter().map(|c| decode_component(c, &o)).collect::<Result<_, _>>()?;
        let deferred = self.deferred.iter().map(|s| decode_system(s, &o)).collect::<Result<_, _>>()?;
        Ok(Decoded { system, components, deferred })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "variables: {}", self.variables.join(" > "));
        let _ = writeln!(out, "input: {}", system_text(&self.input));
        let what = match (self.mode, self.evaluated) {
            (Mode::Lazy, false) => "lazy",
            (Mode::Lazy, true) => "lazy, evaluated",
            (Mode::Full, _) => "full",
        };
        let _ = writeln!(out, "mode: {what}");
        let _ = writeln!(out, "components: {}", self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let mut parts: Vec<String> = c.chain.iter().map(|t| format!("{t} = 0")).collect();
            parts.extend(c.positive.iter().map(|p| format!("{p} > 0")));
            let _ = writeln!(out, "  [{}] [{}] where {}", i + 1, parts.join(", "), c.formula.text);
            if !c.witness.is_empty() {
                let w: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                let _ = writeln!(out, "      witness: {}", w.join(", "));
            }
        }
        if self.mode == Mode::Lazy && !self.evaluated {
            let _ = writeln!(out, "deferred: {}", self.deferred.len());
            for (i, s) in self.deferred.iter().enumerate() {
                let _ = writeln!(out, "  [{}] {}", i + 1, system_text(s));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}

fn system_text(s: &System) -> String {
    let mut parts = Vec::new();
    for (list, rel) in [(&s.eq, "= 0"), (&s.ge, ">= 0"), (&s.gt, "> 0"), (&s.ne, "!= 0")] {
        parts.extend(list.iter().map(|p| format!("{p} {rel}")));
    }
    format!("[{}]", parts.join(", "))
}

/// Solver objects rebuilt from a [`Document`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub system: SemiAlgebraicSystem,
    pub components: Vec<RegularSAS>,
    pub deferred: Vec<SemiAlgebraicSystem>,
}

fn parse_polys(v: &[String], o: &VarOrder) -> Result<Vec<Polynomial>, String> {
    v.iter().map(|s| o.parse(s).map_err(|e| format!("'{s}': {e}"))).collect()
}

fn decode_system(s: &System, o: &VarOrder) -> Result<SemiAlgebraicSystem, String> {
    SemiAlgebraicSystem::new(
        o.clone(),
        parse_polys(&s.eq, o)?,
        parse_polys(&s.ge, o)?,
        parse_polys(&s.gt, o)?,
        parse_polys(&s.ne, o)?,
    )
    .map_err(|e| e.to_string())
}

fn decode_component(c: &Component, o: &VarOrder) -> Result<RegularSAS, String> {
    let mut clauses = Vec::new();
    for cl in &c.formula.clauses {
        let mut atoms = Vec::new();
        for a in cl {
            let p = o.parse(&a.poly).map_err(|e| format!("'{}': {e}", a.poly))?;
            atoms.push(SignAtom::new(p, a.sign));
        }
        clauses.push(atoms);
    }
    let q = if clauses.is_empty() { SignFormula::falsity() } else { SignFormula::from_clauses(clauses) };
    let t = RegularChain::new(o.len(), parse_polys(&c.chain, o)?).map_err(|e| e.to_string())?;
    let p = parse_polys(&c.positive, o)?;
    let mut vars = Vec::new();
    let mut coords = Vec::new();
    // witness coordinates in ascending variable order
    let mut entries: Vec<(usize, Rational)> = Vec::new();
    for (name, value) in &c.witness {
        let v = o.index(name).ok_or_else(|| format!("unknown variable '{name}'"))?;
        let x: Rational = value.parse().map_err(|_| format!("bad rational '{value}'"))?;
        entries.push((v, x));
    }
    entries.sort_by_key(|e| e.0);
    for (v, x) in entries {
        vars.push(v);
        coords.push(x);
    }
    Ok(RegularSAS { q, t, p, witness: SamplePoint { vars, coords } })
}
