//! Small SVG renderings for the demo page: transducer circuits drawn in
//! layers from inputs (bottom) to outputs (top), and contraction trees.

use std::collections::HashSet;
use std::fmt::Write;

use pathcheck::circuit::{Gate, GateKind, TransducerCircuit};
use pathcheck::contraction::{NodeId, NodeKind, ROOT};
use pathcheck::ContractionTree;

const DX: f64 = 46.0;
const DY: f64 = 56.0;
const R: f64 = 15.0;
const PAD: f64 = 30.0;

fn symbol(kind: GateKind) -> &'static str {
    match kind {
        GateKind::Zero => "0",
        GateKind::One => "1",
        GateKind::Var => "v",
        GateKind::And => "∧",
        GateKind::Or => "∨",
        GateKind::Id => "id",
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

const DEFS: &str = r##"<defs><marker id="arr" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="#555"/></marker></defs>"##;

/// Gate positions: the level is the longest dependency chain down to a
/// source, the column follows interface positions and otherwise the first
/// dependency, spread apart so gates on one level never overlap.
fn place(t: &TransducerCircuit) -> Vec<(f64, usize)> {
    let c = t.circuit();
    let order = c.topological_order().expect("builder circuits are acyclic");
    let mut level = vec![0usize; c.len()];
    let mut column = vec![f64::NAN; c.len()];
    for (k, g) in t.inputs().iter().enumerate() {
        column[g.0] = k as f64;
    }
    for (k, g) in t.outputs().iter().enumerate() {
        if column[g.0].is_nan() {
            column[g.0] = k as f64;
        }
    }
    for &g in &order {
        let deps: Vec<_> = c.gate(g).deps().collect();
        level[g.0] = deps.iter().map(|d| level[d.0] + 1).max().unwrap_or(usize::from(!t.inputs().contains(&g)));
        if column[g.0].is_nan() {
            column[g.0] = deps.first().map_or(0.0, |d| column[d.0]);
        }
    }
    let top = level.iter().copied().max().unwrap_or(0);
    let mut x = vec![0.0; c.len()];
    for l in 0..=top {
        let mut row: Vec<usize> = (0..c.len()).filter(|&g| level[g] == l).collect();
        row.sort_by(|&a, &b| column[a].total_cmp(&column[b]).then(a.cmp(&b)));
        let mut next = f64::NEG_INFINITY;
        for g in row {
            x[g] = column[g].max(next);
            next = x[g] + 1.0;
        }
    }
    x.into_iter().zip(level).collect()
}

pub fn circuit(t: &TransducerCircuit) -> String {
    let c = t.circuit();
    let pos = place(t);
    let width = pos.iter().map(|p| p.0).fold(0.0, f64::max);
    let height = pos.iter().map(|p| p.1).max().unwrap_or(0) as f64;
    let at = |g: usize| (PAD + pos[g].0 * DX, PAD + (height - pos[g].1 as f64) * DY);
    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" class="circuit" width="{}" height="{}">{DEFS}"#,
        2.0 * PAD + width * DX,
        2.0 * PAD + height * DY + 12.0
    );
    for (g, gate) in c.gates().iter().enumerate() {
        let (x1, y1) = at(g);
        for d in gate.deps() {
            let (x2, y2) = at(d.0);
            let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1.0);
            let (ux, uy) = ((x2 - x1) / len, (y2 - y1) / len);
            let _ = write!(
                out,
                r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#555" marker-end="url(#arr)"/>"##,
                x1 + ux * R,
                y1 + uy * R,
                x2 - ux * R,
                y2 - uy * R
            );
        }
    }
    for (g, gate) in c.gates().iter().enumerate() {
        let (x, y) = at(g);
        let class = match gate {
            Gate::Const(_) => "const",
            Gate::Var => "var",
            _ => "gate",
        };
        let mut tags = Vec::new();
        if let Some(k) = t.inputs().iter().position(|i| i.0 == g) {
            tags.push(format!("i{k}"));
        }
        if let Some(k) = t.outputs().iter().position(|o| o.0 == g) {
            tags.push(format!("o{k}"));
        }
        let output = if t.outputs().iter().any(|o| o.0 == g) { " output" } else { "" };
        let _ = write!(
            out,
            r#"<g class="{class}{output}"><title>g{g} {}</title><circle cx="{x:.1}" cy="{y:.1}" r="{R}"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text><text class="tag" x="{:.1}" y="{:.1}">{}</text></g>"#,
            gate.kind().label(),
            y + 5.0,
            symbol(gate.kind()),
            x + R,
            y - R,
            tags.join(" ")
        );
    }
    out.push_str("</svg>");
    out
}

/// The live part of a contraction tree. Leaves get consecutive columns in
/// left-to-right order, inner nodes sit above the middle of their children.
/// Leaves whose occurrence is in `highlight` are marked.
pub fn tree(t: &ContractionTree, highlight: &HashSet<usize>) -> String {
    let mut x = vec![0.0; t.nodes().len()];
    let mut depth = vec![0usize; t.nodes().len()];
    let mut next_leaf = 0.0;
    fn walk(t: &ContractionTree, id: NodeId, d: usize, x: &mut [f64], depth: &mut [usize], next: &mut f64) {
        depth[id] = d;
        let node = t.node(id);
        if node.children.is_empty() {
            x[id] = *next;
            *next += 1.0;
            return;
        }
        for &c in &node.children {
            walk(t, c, d + 1, x, depth, next);
        }
        let xs: Vec<f64> = node.children.iter().map(|&c| x[c]).collect();
        x[id] = (xs[0] + xs[xs.len() - 1]) / 2.0;
    }
    walk(t, ROOT, 0, &mut x, &mut depth, &mut next_leaf);
    let live: Vec<NodeId> = {
        let mut v = Vec::new();
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            v.push(id);
            stack.extend(t.node(id).children.iter().rev());
        }
        v
    };
    let width = (next_leaf - 1.0).max(0.0) * 1.6 * DX;
    let height = live.iter().map(|&id| depth[id]).max().unwrap_or(0) as f64 * DY;
    let at = |id: NodeId| (PAD + 10.0 + x[id] * 1.6 * DX, PAD + depth[id] as f64 * DY);
    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" class="tree" width="{:.0}" height="{:.0}">"#,
        2.0 * PAD + 20.0 + width,
        2.0 * PAD + height
    );
    for &id in &live {
        let (x1, y1) = at(id);
        for &c in &t.node(id).children {
            let (x2, y2) = at(c);
            let gates = t.node(c).label.as_ref().map_or(0, |l| l.gate_count());
            let _ = write!(
                out,
                r##"<line x1="{x1:.1}" y1="{:.1}" x2="{x2:.1}" y2="{:.1}" stroke="#555"/><text class="tag" x="{:.1}" y="{:.1}">{gates}</text>"##,
                y1 + R,
                y2 - R,
                (x1 + x2) / 2.0 + 4.0,
                (y1 + y2) / 2.0
            );
        }
    }
    for &id in &live {
        let node = t.node(id);
        let (x, y) = at(id);
        let (label, class) = match &node.kind {
            NodeKind::Root => ("⊨".to_string(), "root"),
            NodeKind::Inner(op) => (op.symbol(), "inner"),
            NodeKind::Leaf { literal, .. } => (literal.to_string(), "leaf"),
        };
        let hot = node.occurrence.is_some_and(|o| highlight.contains(&o));
        let _ = write!(
            out,
            r#"<g class="{class}{}"><circle cx="{x:.1}" cy="{y:.1}" r="{R}"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text></g>"#,
            if hot { " hot" } else { "" },
            y + 5.0,
            escape(&label)
        );
    }
    out.push_str("</svg>");
    out
}
