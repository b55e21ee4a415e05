//! Text formats: irregular-type input documents, tree JSON and DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::fission::{Colour, Diameter, FissionTree, IrregularType, TreeNode};
use crate::rootsys::{CartanElement, Family, RootSystem};
use crate::{Error, Rational, Result};

/// A parsed input document: one irregular type per marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInput {
    pub rs: RootSystem,
    pub points: Vec<IrregularType>,
    pub warnings: Vec<String>,
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, name: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::parse(ctx, format!("missing field `{name}`")))
}

fn as_usize(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::parse(ctx, format!("expected a non-negative integer, found {v}")))
}

fn parse_rational(v: &Value, ctx: &str) -> Result<Rational> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(Error::parse(ctx, format!("expected an integer or \"num/den\" string, found {v}"))),
    };
    Rational::from_str(&text).map_err(|e| Error::parse(ctx, format!("invalid rational {text:?}: {e}")))
}

/// Reads one block `{p, coefficients}`, zero-padding to `p` vectors.
fn parse_block(
    rs: &RootSystem,
    obj: &serde_json::Map<String, Value>,
    ctx: &str,
    warnings: &mut Vec<String>,
) -> Result<IrregularType> {
    let coeffs = field(obj, "coefficients", ctx)?
        .as_array()
        .ok_or_else(|| Error::parse(format!("{ctx}.coefficients"), "expected a list of vectors"))?;
    if coeffs.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let p = match obj.get("p") {
        Some(v) => as_usize(v, &format!("{ctx}.p"))?,
        None => coeffs.len(),
    };
    if p == 0 {
        return Err(Error::EmptyCoefficients);
    }
    if coeffs.len() > p {
        return Err(Error::parse(
            format!("{ctx}.coefficients"),
            format!("{} vectors given but p = {p}", coeffs.len()),
        ));
    }
    let mut elements = Vec::with_capacity(p);
    for (i, vec) in coeffs.iter().enumerate() {
        let vctx = format!("{ctx}.coefficients[{i}]");
        let entries = vec
            .as_array()
            .ok_or_else(|| Error::parse(&vctx, "expected a vector"))?;
        if entries.len() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                found: entries.len(),
            });
        }
        let coords = entries
            .iter()
            .enumerate()
            .map(|(j, x)| parse_rational(x, &format!("{vctx}[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        let (el, moved) = CartanElement::projected(rs, coords)?;
        if moved {
            warnings.push(format!("{vctx}: nonzero trace, projected to trace zero"));
        }
        elements.push(el);
    }
    while elements.len() < p {
        elements.push(CartanElement::zero(rs));
    }
    IrregularType::new(rs, elements)
}

/// Parses an input document.
///
/// The document names `lie_type` and `rank`, and either one block
/// (`p`, `coefficients`) or a list `points` of such blocks.
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse("document", "expected a JSON object"))?;
    let lie_type = field(obj, "lie_type", "document")?
        .as_str()
        .ok_or_else(|| Error::parse("lie_type", "expected a string"))?;
    let family = Family::from_str(lie_type)?;
    let rank = match (family, obj.get("rank")) {
        (Family::G2, None) => 2,
        (_, v) => as_usize(v.ok_or_else(|| Error::parse("document", "missing field `rank`"))?, "rank")?,
    };
    let rs = RootSystem::build(family, rank)?;
    let mut warnings = Vec::new();
    let points = match obj.get("points") {
        Some(Value::Array(blocks)) => {
            if blocks.is_empty() {
                return Err(Error::parse("points", "expected at least one point"));
            }
            blocks
                .iter()
                .enumerate()
                .map(|(k, b)| {
                    let ctx = format!("points[{k}]");
                    let bo = b.as_object().ok_or_else(|| Error::parse(&ctx, "expected an object"))?;
                    parse_block(&rs, bo, &ctx, &mut warnings)
                })
                .collect::<Result<Vec<_>>>()?
        }
        Some(_) => return Err(Error::parse("points", "expected a list")),
        None => vec![parse_block(&rs, obj, "document", &mut warnings)?],
    };
    Ok(ParsedInput { rs, points, warnings })
}

pub fn parse_input_file(path: &std::path::Path) -> Result<ParsedInput> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_input(&text)
}

fn block_json(q: &IrregularType) -> Value {
    let coefficients: Vec<Value> = q
        .coefficients()
        .iter()
        .map(|c| Value::Array(c.coords().iter().map(|x| Value::String(x.to_string())).collect()))
        .collect();
    serde_json::json!({ "p": q.p(), "coefficients": coefficients })
}

/// Emits a document that [`parse_input`] reads back to the same value.
pub fn emit_input(input: &ParsedInput) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("lie_type".into(), Value::String(input.rs.family().to_string()));
    doc.insert("rank".into(), input.rs.rank().into());
    match input.points.as_slice() {
        [single] => {
            if let Value::Object(b) = block_json(single) {
                doc.extend(b);
            }
        }
        many => {
            doc.insert("points".into(), Value::Array(many.iter().map(block_json).collect()));
        }
    }
    serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize")
}

#[derive(Serialize, Deserialize)]
struct TreeDoc {
    family: String,
    rank: usize,
    nodes: Vec<TreeNode>,
    leaf_order: Vec<usize>,
}

pub fn emit_tree_json(t: &FissionTree) -> String {
    let doc = TreeDoc {
        family: t.family().to_string(),
        rank: t.rank(),
        nodes: t.nodes().to_vec(),
        leaf_order: t.leaves(),
    };
    serde_json::to_string_pretty(&doc).expect("tree serializes")
}

pub fn parse_tree_json(text: &str) -> Result<FissionTree> {
    let doc: TreeDoc = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let family = Family::from_str(&doc.family)?;
    let t = FissionTree::from_nodes(family, doc.rank, doc.nodes)?;
    if t.leaves() != doc.leaf_order {
        return Err(Error::MalformedTree(format!(
            "leaf_order {:?} does not match the planar order {:?}",
            doc.leaf_order,
            t.leaves()
        )));
    }
    Ok(t)
}

/// Graphviz rendering: one `rank=same` group per level, the root labelled
/// `*`, leaves labelled `1..` in planar order, blue nodes coloured blue and
/// small nodes dashed.
pub fn emit_tree_dot(t: &FissionTree) -> String {
    let leaves = t.leaves();
    let mut out = String::from("digraph fission_tree {\n  node [shape=circle];\n");
    for level in (1..=t.top_level()).rev() {
        out.push_str("  { rank=same;");
        for n in t.nodes_at(level) {
            let label = if n.parent.is_none() {
                "*".to_string()
            } else if let Some(k) = leaves.iter().position(|&l| l == n.id) {
                (k + 1).to_string()
            } else {
                String::new()
            };
            let mut attrs = vec![format!("label=\"{label}\"")];
            if n.colour == Colour::Blue {
                attrs.push("color=blue".into());
            }
            if n.diameter == Diameter::Small {
                attrs.push("style=dashed".into());
            }
            let _ = write!(out, " n{} [{}];", n.id, attrs.join(", "));
        }
        out.push_str(" }\n");
    }
    for n in t.nodes() {
        if let Some(p) = n.parent {
            let _ = writeln!(out, "  n{p} -> n{};", n.id);
        }
    }
    out.push_str("}\n");
    out
}
