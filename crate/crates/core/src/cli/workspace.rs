//! The line-oriented workspace format.
//!
//! ```text
//! lattice NAME            quantaloid NAME               category NAME over Q     distributor NAME : A -> B
//!   elements a b c          objects O ...                 object x : O             at x y e
//!   leq a b                 hom O1 O2 LATTICE             hom x y e              end
//! end                       unit O e                    end
//!                           compose O1 O2 O3 builtin meet|join
//!                           compose O1 O2 O3
//!                             triple g f h
//!                         end
//! ```
//!
//! `#` starts a comment. Every entity is validated when its block closes.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use indexmap::IndexMap;
use thiserror::Error;

use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::qcat::QCategory;
use crate::qdist::QDistributor;
use crate::quantaloid::{builtin_table, Builtin, JoinCheck, Quantaloid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}: {source}")]
    Validation { line: usize, source: Error },
    #[error("line {line}: `{entity}` is invalid: {}", details.join("; "))]
    Invalid { line: usize, entity: String, details: Vec<String> },
}

impl WorkspaceError {
    pub fn is_parse(&self) -> bool {
        matches!(self, WorkspaceError::Parse { .. })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub lattices: IndexMap<String, FiniteLattice>,
    pub quantaloids: IndexMap<String, Arc<Quantaloid>>,
    pub categories: IndexMap<String, Arc<QCategory>>,
    pub distributors: IndexMap<String, QDistributor>,
    /// Line on which each entity was declared.
    pub lines: HashMap<String, usize>,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    words: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn new(no: usize, text: &'a str) -> Self {
        let body = text.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (i, c) in body.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    words.push((s, &body[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            words.push((s, &body[s..]));
        }
        Line { no, text, words }
    }

    fn err(&self, word: usize, message: impl Into<String>) -> WorkspaceError {
        let column = self
            .words
            .get(word)
            .map(|(b, _)| self.text[..*b].chars().count() + 1)
            .unwrap_or(self.text.chars().count() + 1);
        WorkspaceError::Parse { line: self.no, column, message: message.into() }
    }

    fn word(&self, i: usize) -> Option<&'a str> {
        self.words.get(i).map(|w| w.1)
    }

    fn expect_len(&self, n: usize, shape: &str) -> Result<(), WorkspaceError> {
        if self.words.len() != n {
            return Err(self.err(self.words.len().min(n), format!("expected `{shape}`")));
        }
        Ok(())
    }
}

fn lookup<'m, T>(map: &'m IndexMap<String, T>, line: &Line, i: usize, what: &str) -> Result<&'m T, WorkspaceError> {
    let name = line.word(i).unwrap_or("");
    map.get(name).ok_or_else(|| line.err(i, format!("unknown {what} `{name}`")))
}

fn index_of(items: &[String], line: &Line, i: usize, what: &str) -> Result<usize, WorkspaceError> {
    let name = line.word(i).unwrap_or("");
    items.iter().position(|o| o == name).ok_or_else(|| line.err(i, format!("unknown {what} `{name}`")))
}

fn element(l: &FiniteLattice, line: &Line, i: usize) -> Result<usize, WorkspaceError> {
    let name = line.word(i).unwrap_or("");
    l.element(name).map_err(|e| line.err(i, e.to_string()))
}

/// Join-check mode used when validating quantaloids on load.
fn join_mode(q: &Quantaloid) -> JoinCheck {
    let n = q.len();
    let widest = (0..n * n).map(|i| q.hom(i / n, i % n).len()).max().unwrap_or(0);
    if widest <= 10 { JoinCheck::AllSubsets } else { JoinCheck::PairsAndEmpty }
}

pub fn parse_workspace(text: &str) -> Result<Workspace, WorkspaceError> {
    let lines: Vec<Line> = text.lines().enumerate().map(|(i, t)| Line::new(i + 1, t)).collect();
    let mut ws = Workspace::default();
    let mut i = 0;
    while i < lines.len() {
        let head = &lines[i];
        let Some(kw) = head.word(0) else {
            i += 1;
            continue;
        };
        let end = (i + 1..lines.len())
            .find(|&j| lines[j].word(0) == Some("end"))
            .ok_or_else(|| head.err(0, format!("`{kw}` block is not closed by `end`")))?;
        let body = &lines[i + 1..end];
        if let Some(bad) = body.iter().find(|l| matches!(l.word(0), Some("lattice" | "quantaloid" | "category" | "distributor"))) {
            return Err(bad.err(0, "nested block; missing `end`"));
        }
        if lines[end].words.len() != 1 {
            return Err(lines[end].err(1, "unexpected text after `end`"));
        }
        let name = head.word(1).ok_or_else(|| head.err(1, format!("`{kw}` needs a name")))?.to_string();
        if ws.lines.contains_key(&name) {
            return Err(head.err(1, format!("duplicate name `{name}`")));
        }
        match kw {
            "lattice" => {
                head.expect_len(2, "lattice NAME")?;
                let l = parse_lattice(&name, head, body)?;
                ws.lattices.insert(name.clone(), l);
            }
            "quantaloid" => {
                head.expect_len(2, "quantaloid NAME")?;
                let q = parse_quantaloid(&ws, &name, head, body)?;
                ws.quantaloids.insert(name.clone(), Arc::new(q));
            }
            "category" => {
                head.expect_len(4, "category NAME over QUANTALOID")?;
                if head.word(2) != Some("over") {
                    return Err(head.err(2, "expected `over`"));
                }
                let q = lookup(&ws.quantaloids, head, 3, "quantaloid")?.clone();
                let c = parse_category(q, &name, head, body)?;
                ws.categories.insert(name.clone(), Arc::new(c));
            }
            "distributor" => {
                head.expect_len(6, "distributor NAME : CAT1 -> CAT2")?;
                if head.word(2) != Some(":") {
                    return Err(head.err(2, "expected `:`"));
                }
                if head.word(4) != Some("->") {
                    return Err(head.err(4, "expected `->`"));
                }
                let a = lookup(&ws.categories, head, 3, "category")?.clone();
                let b = lookup(&ws.categories, head, 5, "category")?.clone();
                let d = parse_distributor(a, b, &name, head, body)?;
                ws.distributors.insert(name.clone(), d);
            }
            other => return Err(head.err(0, format!("unknown block `{other}`"))),
        }
        ws.lines.insert(name, head.no);
        i = end + 1;
    }
    Ok(ws)
}

fn parse_lattice(name: &str, head: &Line, body: &[Line]) -> Result<FiniteLattice, WorkspaceError> {
    let mut elements: Option<Vec<String>> = None;
    let mut pairs = Vec::new();
    for l in body.iter().filter(|l| !l.words.is_empty()) {
        match l.word(0) {
            Some("elements") => {
                if elements.is_some() {
                    return Err(l.err(0, "elements declared twice"));
                }
                elements = Some(l.words[1..].iter().map(|w| w.1.to_string()).collect());
            }
            Some("leq") => {
                l.expect_len(3, "leq a b")?;
                let els = elements.as_ref().ok_or_else(|| l.err(0, "`leq` before `elements`"))?;
                pairs.push((index_of(els, l, 1, "element")?, index_of(els, l, 2, "element")?));
            }
            Some(w) => return Err(l.err(0, format!("unexpected `{w}` in lattice"))),
            None => {}
        }
    }
    let elements = elements.ok_or_else(|| head.err(1, "lattice without `elements`"))?;
    FiniteLattice::from_indexed(name, elements, &pairs)
        .map_err(|e| WorkspaceError::Validation { line: head.no, source: e.into() })
}

fn parse_quantaloid(ws: &Workspace, name: &str, head: &Line, body: &[Line]) -> Result<Quantaloid, WorkspaceError> {
    let mut objects: Option<Vec<String>> = None;
    let mut homs: HashMap<(usize, usize), FiniteLattice> = HashMap::new();
    let mut units: HashMap<usize, usize> = HashMap::new();
    let mut tables: HashMap<(usize, usize, usize), Vec<Option<usize>>> = HashMap::new();
    let mut current: Option<(usize, usize, usize)> = None;
    let objs = |l: &Line, objects: &Option<Vec<String>>| -> Result<Vec<String>, WorkspaceError> {
        objects.clone().ok_or_else(|| l.err(0, "`objects` must come first"))
    };
    for l in body.iter().filter(|l| !l.words.is_empty()) {
        let kw = l.word(0).unwrap_or("");
        if kw != "triple" {
            current = None;
        }
        match kw {
            "objects" => {
                if objects.is_some() {
                    return Err(l.err(0, "objects declared twice"));
                }
                objects = Some(l.words[1..].iter().map(|w| w.1.to_string()).collect());
            }
            "hom" => {
                l.expect_len(4, "hom O1 O2 LATTICE")?;
                let os = objs(l, &objects)?;
                let (x, y) = (index_of(&os, l, 1, "object")?, index_of(&os, l, 2, "object")?);
                let lat = lookup(&ws.lattices, l, 3, "lattice")?.clone();
                if homs.insert((x, y), lat).is_some() {
                    return Err(l.err(1, "hom declared twice"));
                }
            }
            "unit" => {
                l.expect_len(3, "unit O e")?;
                let os = objs(l, &objects)?;
                let x = index_of(&os, l, 1, "object")?;
                let lat = homs.get(&(x, x)).ok_or_else(|| l.err(1, "unit before its hom"))?;
                units.insert(x, element(lat, l, 2)?);
            }
            "compose" => {
                let os = objs(l, &objects)?;
                let xyz = (index_of(&os, l, 1, "object")?, index_of(&os, l, 2, "object")?, index_of(&os, l, 3, "object")?);
                let get = |a, b, i| homs.get(&(a, b)).ok_or_else(|| l.err(i, "compose before its homs"));
                let (fxy, fyz, fxz) = (get(xyz.0, xyz.1, 1)?, get(xyz.1, xyz.2, 2)?, get(xyz.0, xyz.2, 3)?);
                if tables.contains_key(&xyz) {
                    return Err(l.err(1, "composition declared twice"));
                }
                match l.words.len() {
                    4 => {
                        tables.insert(xyz, vec![None; fxy.len() * fyz.len()]);
                        current = Some(xyz);
                    }
                    6 if l.word(4) == Some("builtin") => {
                        let rule = match l.word(5) {
                            Some("meet") => Builtin::Meet,
                            Some("join") => Builtin::Join,
                            _ => return Err(l.err(5, "expected `meet` or `join`")),
                        };
                        if fxy != fyz || fyz != fxz {
                            return Err(l.err(4, "builtin composition needs one lattice for all three homs"));
                        }
                        tables.insert(xyz, builtin_table(fxy, rule).into_iter().map(Some).collect());
                    }
                    _ => return Err(l.err(4, "expected `compose O1 O2 O3 [builtin meet|join]`")),
                }
            }
            "triple" => {
                l.expect_len(4, "triple g f h")?;
                let xyz = current.ok_or_else(|| l.err(0, "`triple` outside an explicit `compose`"))?;
                let (fxy, fyz, fxz) = (&homs[&(xyz.0, xyz.1)], &homs[&(xyz.1, xyz.2)], &homs[&(xyz.0, xyz.2)]);
                let (g, f, h) = (element(fyz, l, 1)?, element(fxy, l, 2)?, element(fxz, l, 3)?);
                let t = tables.get_mut(&xyz).expect("opened");
                if t[g * fxy.len() + f].replace(h).is_some() {
                    return Err(l.err(1, "triple declared twice"));
                }
            }
            w => return Err(l.err(0, format!("unexpected `{w}` in quantaloid"))),
        }
    }
    let objects = objects.ok_or_else(|| head.err(1, "quantaloid without `objects`"))?;
    let n = objects.len();
    let mut hom_list = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            hom_list.push(
                homs.remove(&(x, y))
                    .ok_or_else(|| head.err(1, format!("missing hom {} {}", objects[x], objects[y])))?,
            );
        }
    }
    let mut unit_list = Vec::with_capacity(n);
    for (x, o) in objects.iter().enumerate() {
        unit_list.push(*units.get(&x).ok_or_else(|| head.err(1, format!("missing unit for {o}")))?);
    }
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = tables
                    .remove(&(x, y, z))
                    .ok_or_else(|| head.err(1, format!("missing composition {} {} {}", objects[x], objects[y], objects[z])))?;
                let full: Option<Vec<usize>> = t.into_iter().collect();
                comp.push(full.ok_or_else(|| {
                    head.err(1, format!("composition {} {} {} is not total", objects[x], objects[y], objects[z]))
                })?);
            }
        }
    }
    let q = Quantaloid::new(name, objects, hom_list, unit_list, comp)
        .map_err(|e| WorkspaceError::Validation { line: head.no, source: e })?;
    let report = q.validate_with(join_mode(&q));
    if !report.is_valid() {
        return Err(WorkspaceError::Invalid {
            line: head.no,
            entity: name.to_string(),
            details: report.violations.iter().take(5).map(|v| format!("{}: {}", v.law, v.witness)).collect(),
        });
    }
    Ok(q)
}

fn parse_category(q: Arc<Quantaloid>, name: &str, head: &Line, body: &[Line]) -> Result<QCategory, WorkspaceError> {
    let mut objects: Vec<String> = Vec::new();
    let mut types = Vec::new();
    let mut homs: HashMap<(usize, usize), usize> = HashMap::new();
    for l in body.iter().filter(|l| !l.words.is_empty()) {
        match l.word(0) {
            Some("object") => {
                l.expect_len(4, "object x : O")?;
                if l.word(2) != Some(":") {
                    return Err(l.err(2, "expected `:`"));
                }
                let o = l.word(1).expect("checked").to_string();
                if objects.contains(&o) {
                    return Err(l.err(1, format!("duplicate object `{o}`")));
                }
                types.push(index_of(q.objects(), l, 3, "quantaloid object")?);
                objects.push(o);
            }
            Some("hom") => {
                l.expect_len(4, "hom x y e")?;
                let (x, y) = (index_of(&objects, l, 1, "object")?, index_of(&objects, l, 2, "object")?);
                let v = element(q.hom(types[x], types[y]), l, 3)?;
                if homs.insert((x, y), v).is_some() {
                    return Err(l.err(1, "hom declared twice"));
                }
            }
            Some(w) => return Err(l.err(0, format!("unexpected `{w}` in category"))),
            None => {}
        }
    }
    let n = objects.len();
    let mut hom = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            hom.push(*homs.get(&(x, y)).ok_or_else(|| head.err(1, format!("missing hom {} {}", objects[x], objects[y])))?);
        }
    }
    let c = QCategory::new(name, q, objects, types, hom).map_err(|e| WorkspaceError::Validation { line: head.no, source: e })?;
    let report = c.validate();
    if !report.is_valid() {
        return Err(WorkspaceError::Invalid {
            line: head.no,
            entity: name.to_string(),
            details: report.violations.iter().take(5).map(|v| format!("{}: {}", v.law, v.witness)).collect(),
        });
    }
    Ok(c)
}

fn parse_distributor(
    a: Arc<QCategory>,
    b: Arc<QCategory>,
    name: &str,
    head: &Line,
    body: &[Line],
) -> Result<QDistributor, WorkspaceError> {
    let mut cells: HashMap<(usize, usize), usize> = HashMap::new();
    let q = a.base().clone();
    for l in body.iter().filter(|l| !l.words.is_empty()) {
        match l.word(0) {
            Some("at") => {
                l.expect_len(4, "at x y e")?;
                let (x, y) = (index_of(a.objects(), l, 1, "object")?, index_of(b.objects(), l, 2, "object")?);
                let v = element(q.hom(a.ty(x), b.ty(y)), l, 3)?;
                if cells.insert((x, y), v).is_some() {
                    return Err(l.err(1, "cell declared twice"));
                }
            }
            Some(w) => return Err(l.err(0, format!("unexpected `{w}` in distributor"))),
            None => {}
        }
    }
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in 0..a.len() {
        for y in 0..b.len() {
            out.push(*cells.get(&(x, y)).ok_or_else(|| {
                head.err(1, format!("missing cell {} {}", a.objects()[x], b.objects()[y]))
            })?);
        }
    }
    let d = QDistributor::new(name, a, b, out).map_err(|e| WorkspaceError::Validation { line: head.no, source: e })?;
    let report = d.validate();
    if !report.is_valid() {
        return Err(WorkspaceError::Invalid {
            line: head.no,
            entity: name.to_string(),
            details: report.violations.iter().take(5).map(|v| format!("{}: {}", v.law, v.witness)).collect(),
        });
    }
    Ok(d)
}

fn write_lattice(out: &mut String, l: &FiniteLattice) {
    let _ = writeln!(out, "lattice {}", l.name());
    let _ = writeln!(out, "  elements {}", l.elements().join(" "));
    for (a, b) in l.covers() {
        let _ = writeln!(out, "  leq {} {}", l.element_name(a), l.element_name(b));
    }
    out.push_str("end\n\n");
}

fn write_quantaloid(out: &mut String, q: &Quantaloid) {
    let n = q.len();
    let o = q.objects();
    let _ = writeln!(out, "quantaloid {}", q.name());
    let _ = writeln!(out, "  objects {}", o.join(" "));
    for x in 0..n {
        for y in 0..n {
            let _ = writeln!(out, "  hom {} {} {}", o[x], o[y], q.hom(x, y).name());
        }
    }
    for x in 0..n {
        let _ = writeln!(out, "  unit {} {}", o[x], q.hom(x, x).element_name(q.unit(x)));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (fxy, fyz, fxz) = (q.hom(x, y), q.hom(y, z), q.hom(x, z));
                let table: Vec<usize> =
                    (0..fyz.len()).flat_map(|g| (0..fxy.len()).map(move |f| (g, f))).map(|(g, f)| q.comp(x, y, z, g, f)).collect();
                let builtin = if fxy == fyz && fyz == fxz {
                    [Builtin::Meet, Builtin::Join].into_iter().find(|&r| builtin_table(fxy, r) == table)
                } else {
                    None
                };
                match builtin {
                    Some(Builtin::Meet) => {
                        let _ = writeln!(out, "  compose {} {} {} builtin meet", o[x], o[y], o[z]);
                    }
                    Some(Builtin::Join) => {
                        let _ = writeln!(out, "  compose {} {} {} builtin join", o[x], o[y], o[z]);
                    }
                    None => {
                        let _ = writeln!(out, "  compose {} {} {}", o[x], o[y], o[z]);
                        for g in 0..fyz.len() {
                            for f in 0..fxy.len() {
                                let h = q.comp(x, y, z, g, f);
                                let _ = writeln!(
                                    out,
                                    "    triple {} {} {}",
                                    fyz.element_name(g),
                                    fxy.element_name(f),
                                    fxz.element_name(h)
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out.push_str("end\n\n");
}

fn write_category(out: &mut String, c: &QCategory) {
    let q = c.base();
    let _ = writeln!(out, "category {} over {}", c.name(), q.name());
    for x in 0..c.len() {
        let _ = writeln!(out, "  object {} : {}", c.objects()[x], q.objects()[c.ty(x)]);
    }
    for x in 0..c.len() {
        for y in 0..c.len() {
            let _ = writeln!(out, "  hom {} {} {}", c.objects()[x], c.objects()[y], c.hom_name(x, y));
        }
    }
    out.push_str("end\n\n");
}

fn write_distributor(out: &mut String, d: &QDistributor) {
    let (a, b) = (d.dom(), d.cod());
    let _ = writeln!(out, "distributor {} : {} -> {}", d.name, a.name(), b.name());
    for x in 0..a.len() {
        for y in 0..b.len() {
            let _ = writeln!(out, "  at {} {} {}", a.objects()[x], b.objects()[y], d.cell_name(x, y));
        }
    }
    out.push_str("end\n\n");
}

/// Renders a workspace; lattices reachable from quantaloids are emitted even if unnamed in `ws`.
pub fn serialize_workspace(ws: &Workspace) -> String {
    let mut out = String::new();
    let mut lattices: IndexMap<String, FiniteLattice> = ws.lattices.clone();
    for q in ws.quantaloids.values() {
        let n = q.len();
        for i in 0..n * n {
            let l = q.hom(i / n, i % n);
            lattices.entry(l.name().to_string()).or_insert_with(|| l.clone());
        }
    }
    for l in lattices.values() {
        write_lattice(&mut out, l);
    }
    for q in ws.quantaloids.values() {
        write_quantaloid(&mut out, q);
    }
    for c in ws.categories.values() {
        write_category(&mut out, c);
    }
    for d in ws.distributors.values() {
        write_distributor(&mut out, d);
    }
    out
}

impl Workspace {
    /// A workspace holding one category together with its quantaloid.
    pub fn of_category(c: &Arc<QCategory>) -> Self {
        let mut ws = Workspace::default();
        ws.quantaloids.insert(c.base().name().to_string(), c.base().clone());
        ws.categories.insert(c.name().to_string(), c.clone());
        ws
    }

    pub fn category(&self, name: &str) -> Option<&Arc<QCategory>> {
        self.categories.get(name)
    }

    /// Structural equality: same names in the same order with equal contents.
    pub fn same_as(&self, other: &Workspace) -> bool {
        fn keys<T>(m: &IndexMap<String, T>) -> Vec<&String> {
            m.keys().collect()
        }
        keys(&self.quantaloids) == keys(&other.quantaloids)
            && keys(&self.categories) == keys(&other.categories)
            && keys(&self.distributors) == keys(&other.distributors)
            && self.quantaloids.values().zip(other.quantaloids.values()).all(|(a, b)| a.same_structure(b))
            && self.categories.values().zip(other.categories.values()).all(|(a, b)| a.same_as(b) && a.objects() == b.objects())
            && self.distributors.values().zip(other.distributors.values()).all(|(a, b)| a.same_as(b))
    }
}
