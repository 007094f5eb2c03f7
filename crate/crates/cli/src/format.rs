//! JSON object files.
//!
//! A file holds a field descriptor and either Lie-side blocks (`lie`, optional
//! `module` and `form`) or pair-side blocks (`gjsp`, optional `pairing`).
//! Sparse tensors are arrays of tuples `[i, j, ..., "c"]`; scalars are strings
//! so that fractions survive exactly.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use superpair::gjsp::ProductEntry;
use superpair::{
    Field, Gjsp, GjspObject, InvariantForm, LieSuperAlgebra, Matrix, MetricModuleTriple, Parity, QuadExt, QuadRing, Ring,
    Scalar, Sign, SuperModule, SuperSpace,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn resolve(self, location: &str) -> Result<Field, CliError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p).map_err(|e| CliError::schema(format!("{location}: field.p"), e.to_string())),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> FieldSpec {
        match f {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

/// Parses a field name as used by the environment variable: `rational`, `Q`,
/// `prime:P` or `F_P`.
pub fn parse_field_name(text: &str) -> Result<Field, CliError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("rational") || t == "Q" {
        return Ok(Field::Rational);
    }
    let p = t.strip_prefix("prime:").or_else(|| t.strip_prefix("F_"));
    match p.map(|p| p.parse::<u64>()) {
        Some(Ok(p)) => Ok(Field::prime(p)?),
        _ => Err(CliError::Usage(format!("unknown field {text:?}; expected \"rational\" or \"prime:P\""))),
    }
}

pub type FormEntry = (usize, usize, String);
pub type ActionEntry = (usize, usize, usize, String);
pub type TripleEntry = (usize, usize, usize, usize, String);

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie: Option<LieBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gjsp: Option<GjspBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<PairingBlock>,
}

/// `[i, j, k, c]` means `[x_i, x_j]` has coefficient `c` on `x_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieBlock {
    pub parities: Vec<u8>,
    #[serde(default)]
    pub brackets: Vec<ActionEntry>,
}

/// `[x, j, k, c]` means `x·m_j` has coefficient `c` on `m_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub parities: Vec<u8>,
    #[serde(default)]
    pub action: Vec<ActionEntry>,
}

/// Gram matrix entries `[i, j, c]` of the invariant form on the Lie block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormBlock {
    #[serde(default)]
    pub entries: Vec<FormEntry>,
}

/// `[x, y, z, k, c]` in `products_minus` means `{x, y, z}⁻` has coefficient
/// `c` on the k-th basis vector of `V⁻` (`x, z, k` index `V⁻`, `y` indexes `V⁺`);
/// `products_plus` likewise with the sides exchanged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GjspBlock {
    pub minus: Vec<u8>,
    pub plus: Vec<u8>,
    #[serde(default)]
    pub products_minus: Vec<TripleEntry>,
    #[serde(default)]
    pub products_plus: Vec<TripleEntry>,
}

/// Entries `[i, j, c]` of `⟨f_i, v_j⟩` with `f_i ∈ V⁻`, `v_j ∈ V⁺`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingBlock {
    #[serde(default)]
    pub entries: Vec<FormEntry>,
}

/// The objects described by one file, already validated.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub source: String,
    pub field: Field,
    pub lie: Option<Arc<LieSuperAlgebra>>,
    pub module: Option<SuperModule>,
    pub form: Option<InvariantForm>,
    pub pair: Option<Gjsp>,
    pub pairing: Option<Matrix>,
}

impl Loaded {
    fn missing(&self, what: &str) -> CliError {
        CliError::schema(self.source.clone(), format!("expected a {what} block"))
    }

    pub fn is_pair_side(&self) -> bool {
        self.pair.is_some()
    }

    pub fn lie(&self) -> Result<&Arc<LieSuperAlgebra>, CliError> {
        self.lie.as_ref().ok_or_else(|| self.missing("lie"))
    }

    pub fn module(&self) -> Result<&SuperModule, CliError> {
        self.module.as_ref().ok_or_else(|| self.missing("module"))
    }

    pub fn form(&self) -> Result<&InvariantForm, CliError> {
        self.form.as_ref().ok_or_else(|| self.missing("form"))
    }

    pub fn pair(&self) -> Result<&Gjsp, CliError> {
        self.pair.as_ref().ok_or_else(|| self.missing("gjsp"))
    }

    pub fn triple(&self) -> Result<MetricModuleTriple, CliError> {
        Ok(MetricModuleTriple::new(self.module()?.clone(), self.form()?.clone())?)
    }

    pub fn object(&self) -> Result<GjspObject, CliError> {
        let pairing = self.pairing.as_ref().ok_or_else(|| self.missing("pairing"))?;
        Ok(GjspObject::new(self.pair()?.clone(), pairing.clone())?)
    }

    /// The file describing the same objects, in canonical order.
    pub fn to_file(&self) -> Result<ObjectFile, CliError> {
        let f = self.field;
        let mut out = ObjectFile { field: Some(f.into()), ..ObjectFile::default() };
        if let Some(lie) = &self.lie {
            out.lie = Some(lie_block(f, lie)?);
        }
        if let Some(m) = &self.module {
            out.module = Some(module_block(f, m)?);
        }
        if let Some(form) = &self.form {
            out.form = Some(FormBlock { entries: matrix_entries(f, form.gram())? });
        }
        if let Some(pair) = &self.pair {
            out.gjsp = Some(gjsp_block(f, pair)?);
        }
        if let Some(p) = &self.pairing {
            out.pairing = Some(PairingBlock { entries: matrix_entries(f, p)? });
        }
        Ok(out)
    }
}

/// Canonical text of `s` in `field`. Fails for a rational whose denominator
/// vanishes mod p.
pub fn scalar_text(field: Field, s: &Scalar) -> Result<String, CliError> {
    Ok(field.parse(&s.to_string())?.to_string())
}

fn parities_bits(space: &SuperSpace) -> Vec<u8> {
    space.parities().iter().map(|p| p.bit()).collect()
}

fn lie_block(f: Field, lie: &LieSuperAlgebra) -> Result<LieBlock, CliError> {
    let brackets = lie.entries().into_iter().map(|(i, j, k, c)| Ok((i, j, k, scalar_text(f, &c)?))).collect::<Result<_, CliError>>()?;
    Ok(LieBlock { parities: parities_bits(lie.space()), brackets })
}

fn module_block(f: Field, m: &SuperModule) -> Result<ModuleBlock, CliError> {
    let action = m.entries().into_iter().map(|(i, j, k, c)| Ok((i, j, k, scalar_text(f, &c)?))).collect::<Result<_, CliError>>()?;
    Ok(ModuleBlock { parities: parities_bits(m.space()), action })
}

fn gjsp_block(f: Field, pair: &Gjsp) -> Result<GjspBlock, CliError> {
    let side = |sigma: Sign| -> Result<Vec<TripleEntry>, CliError> {
        pair.entries(sigma).into_iter().map(|(x, y, z, o, c)| Ok((x, y, z, o, scalar_text(f, &c)?))).collect()
    };
    Ok(GjspBlock {
        minus: parities_bits(pair.space(Sign::Minus)),
        plus: parities_bits(pair.space(Sign::Plus)),
        products_minus: side(Sign::Minus)?,
        products_plus: side(Sign::Plus)?,
    })
}

fn matrix_entries(f: Field, m: &Matrix) -> Result<Vec<FormEntry>, CliError> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.push((i, j, scalar_text(f, &m[(i, j)])?));
            }
        }
    }
    Ok(out)
}

impl ObjectFile {
    pub fn from_triple(field: Field, t: &MetricModuleTriple) -> Result<ObjectFile, CliError> {
        Ok(ObjectFile {
            field: Some(field.into()),
            lie: Some(lie_block(field, t.algebra())?),
            module: Some(module_block(field, t.module())?),
            form: Some(FormBlock { entries: matrix_entries(field, t.form().gram())? }),
            ..ObjectFile::default()
        })
    }

    pub fn from_object(field: Field, o: &GjspObject) -> Result<ObjectFile, CliError> {
        Ok(ObjectFile {
            field: Some(field.into()),
            gjsp: Some(gjsp_block(field, &o.pair)?),
            pairing: Some(PairingBlock { entries: matrix_entries(field, &o.pairing.matrix)? }),
            ..ObjectFile::default()
        })
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("object files serialize")
    }

    /// Canonical text: sorted keys, one tuple per line, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        canonical_json(&self.to_value())
    }

    /// Validates the file and builds the objects it describes.
    pub fn resolve(&self, source: &str, default_field: Field) -> Result<Loaded, CliError> {
        let field = match self.field {
            Some(spec) => spec.resolve(source)?,
            None => default_field,
        };
        let cx = Cx { source, field };
        let lie_side = self.lie.is_some() || self.module.is_some() || self.form.is_some();
        let pair_side = self.gjsp.is_some() || self.pairing.is_some();
        if lie_side && pair_side {
            return Err(cx.err("(root)", "a file holds either lie/module/form blocks or gjsp/pairing blocks, not both"));
        }
        if !lie_side && !pair_side {
            return Err(cx.err("(root)", "no object block"));
        }
        let mut out = Loaded { source: source.to_string(), field, lie: None, module: None, form: None, pair: None, pairing: None };
        if lie_side {
            let lb = self.lie.as_ref().ok_or_else(|| cx.err("(root)", "module and form blocks need a lie block"))?;
            let space = cx.space("lie.parities", &lb.parities)?;
            let n = space.dim();
            let mut entries = Vec::with_capacity(lb.brackets.len());
            for (k, (i, j, l, c)) in lb.brackets.iter().enumerate() {
                let at = format!("lie.brackets[{k}]");
                for (pos, &x) in [i, j, l].into_iter().enumerate() {
                    cx.index(&format!("{at}[{pos}]"), x, n, "algebra")?;
                }
                entries.push((*i, *j, *l, cx.scalar(&format!("{at}[3]"), c)?));
            }
            let lie = Arc::new(LieSuperAlgebra::from_entries(space, &entries)?);
            if let Some(mb) = &self.module {
                let space = cx.space("module.parities", &mb.parities)?;
                let m = space.dim();
                let mut entries = Vec::with_capacity(mb.action.len());
                for (k, (x, j, l, c)) in mb.action.iter().enumerate() {
                    let at = format!("module.action[{k}]");
                    cx.index(&format!("{at}[0]"), *x, n, "algebra")?;
                    cx.index(&format!("{at}[1]"), *j, m, "module")?;
                    cx.index(&format!("{at}[2]"), *l, m, "module")?;
                    entries.push((*x, *j, *l, cx.scalar(&format!("{at}[3]"), c)?));
                }
                out.module = Some(SuperModule::from_entries(Arc::clone(&lie), space, &entries)?);
            }
            if let Some(fb) = &self.form {
                let entries = cx.matrix_entries("form.entries", &fb.entries, n, n)?;
                out.form = Some(InvariantForm::from_entries(Arc::clone(&lie), &entries)?);
            }
            out.lie = Some(lie);
        } else {
            let gb = self.gjsp.as_ref().ok_or_else(|| cx.err("(root)", "a pairing block needs a gjsp block"))?;
            let minus = cx.space("gjsp.minus", &gb.minus)?;
            let plus = cx.space("gjsp.plus", &gb.plus)?;
            let (nm, np) = (minus.dim(), plus.dim());
            let side = |name: &str, list: &[TripleEntry], n: usize, m: usize| -> Result<Vec<ProductEntry>, CliError> {
                let mut entries = Vec::with_capacity(list.len());
                for (k, (x, y, z, o, c)) in list.iter().enumerate() {
                    let at = format!("gjsp.{name}[{k}]");
                    cx.index(&format!("{at}[0]"), *x, n, "this side")?;
                    cx.index(&format!("{at}[1]"), *y, m, "the opposite side")?;
                    cx.index(&format!("{at}[2]"), *z, n, "this side")?;
                    cx.index(&format!("{at}[3]"), *o, n, "this side")?;
                    entries.push((*x, *y, *z, *o, cx.scalar(&format!("{at}[4]"), c)?));
                }
                Ok(entries)
            };
            let em = side("products_minus", &gb.products_minus, nm, np)?;
            let ep = side("products_plus", &gb.products_plus, np, nm)?;
            out.pair = Some(Gjsp::from_entries(minus, plus, &em, &ep)?);
            if let Some(pb) = &self.pairing {
                let entries = cx.matrix_entries("pairing.entries", &pb.entries, nm, np)?;
                let mut p = Matrix::zeros(nm, np);
                for (i, j, c) in entries {
                    p[(i, j)] = &p[(i, j)] + &c;
                }
                out.pairing = Some(p);
            }
        }
        Ok(out)
    }
}

/// Validation context: the file name for messages and the field for scalars.
struct Cx<'a> {
    source: &'a str,
    field: Field,
}

impl Cx<'_> {
    fn err(&self, at: &str, message: impl Into<String>) -> CliError {
        CliError::schema(format!("{}: {at}", self.source), message)
    }

    fn scalar(&self, at: &str, text: &str) -> Result<Scalar, CliError> {
        self.field.parse(text).map_err(|e| self.err(at, format!("bad scalar {text:?}: {e}")))
    }

    fn index(&self, at: &str, i: usize, n: usize, what: &str) -> Result<(), CliError> {
        if i >= n {
            return Err(self.err(at, format!("index {i} out of range for {what} of dimension {n}")));
        }
        Ok(())
    }

    fn space(&self, at: &str, bits: &[u8]) -> Result<SuperSpace, CliError> {
        let parities = bits
            .iter()
            .enumerate()
            .map(|(k, &b)| Parity::from_bit(b).map_err(|_| self.err(&format!("{at}[{k}]"), format!("parity must be 0 or 1, got {b}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SuperSpace::new(parities))
    }

    fn matrix_entries(&self, at: &str, list: &[FormEntry], rows: usize, cols: usize) -> Result<Vec<(usize, usize, Scalar)>, CliError> {
        let mut out = Vec::with_capacity(list.len());
        for (k, (i, j, c)) in list.iter().enumerate() {
            self.index(&format!("{at}[{k}][0]"), *i, rows, "rows")?;
            self.index(&format!("{at}[{k}][1]"), *j, cols, "columns")?;
            out.push((*i, *j, self.scalar(&format!("{at}[{k}][2]"), c)?));
        }
        Ok(out)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn decode<T: serde::de::DeserializeOwned>(text: &str, source: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::schema(source, e.to_string()))
}

pub fn parse_object(text: &str, source: &str, default_field: Field) -> Result<Loaded, CliError> {
    decode::<ObjectFile>(text, source)?.resolve(source, default_field)
}

pub fn load_object(path: &Path, default_field: Field) -> Result<Loaded, CliError> {
    parse_object(&read(path)?, &path.display().to_string(), default_field)
}

/// A matrix entry: a field element, or `[a, b]` for `a + b·t` in a quadratic ring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingValue {
    Base(String),
    Ext(String, String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixBlock {
    pub rows: usize,
    pub cols: usize,
    #[serde(default)]
    pub entries: Vec<(usize, usize, RingValue)>,
}

/// Ring elements that can be read from and written to matrix entries.
pub trait Entry: Ring {
    fn read(v: &RingValue, field: Field, ring: Option<&Arc<QuadRing>>) -> Result<Self, String>;
    fn write(&self, field: Field) -> Result<RingValue, CliError>;
    fn text(&self, field: Field) -> String;
}

impl Entry for Scalar {
    fn read(v: &RingValue, field: Field, _: Option<&Arc<QuadRing>>) -> Result<Scalar, String> {
        match v {
            RingValue::Base(s) => field.parse(s).map_err(|e| format!("bad scalar {s:?}: {e}")),
            RingValue::Ext(..) => Err("ring elements need --ring".into()),
        }
    }

    fn write(&self, field: Field) -> Result<RingValue, CliError> {
        Ok(RingValue::Base(scalar_text(field, self)?))
    }

    fn text(&self, field: Field) -> String {
        scalar_text(field, self).unwrap_or_else(|_| self.to_string())
    }
}

impl Entry for QuadExt {
    fn read(v: &RingValue, field: Field, ring: Option<&Arc<QuadRing>>) -> Result<QuadExt, String> {
        let ring = ring.ok_or("no ring selected")?;
        let p = |s: &String| field.parse(s).map_err(|e| format!("bad scalar {s:?}: {e}"));
        match v {
            RingValue::Base(a) => Ok(ring.elem(p(a)?, Scalar::zero())),
            RingValue::Ext(a, b) => Ok(ring.elem(p(a)?, p(b)?)),
        }
    }

    fn write(&self, field: Field) -> Result<RingValue, CliError> {
        let (a, b) = self.parts();
        if b.is_zero() {
            Ok(RingValue::Base(scalar_text(field, a)?))
        } else {
            Ok(RingValue::Ext(scalar_text(field, a)?, scalar_text(field, b)?))
        }
    }

    fn text(&self, field: Field) -> String {
        let (a, b) = self.parts();
        let (ta, tb) = (a.text(field), b.text(field));
        match (a.is_zero(), b.is_zero()) {
            (_, true) => ta,
            (true, false) => format!("{tb}*t"),
            (false, false) => match tb.strip_prefix('-') {
                Some(rest) => format!("{ta} - {rest}*t"),
                None => format!("{ta} + {tb}*t"),
            },
        }
    }
}

impl MatrixBlock {
    pub fn from_matrix<R: Entry>(field: Field, m: &Matrix<R>) -> Result<MatrixBlock, CliError> {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() {
                    entries.push((i, j, m[(i, j)].write(field)?));
                }
            }
        }
        Ok(MatrixBlock { rows: m.rows(), cols: m.cols(), entries })
    }

    /// The matrix, after checking it has the expected shape.
    pub fn to_matrix<R: Entry>(
        &self,
        at: &str,
        field: Field,
        ring: Option<&Arc<QuadRing>>,
        shape: (usize, usize),
    ) -> Result<Matrix<R>, CliError> {
        if (self.rows, self.cols) != shape {
            return Err(CliError::schema(
                at,
                format!("expected a {}x{} matrix, got {}x{}", shape.0, shape.1, self.rows, self.cols),
            ));
        }
        let mut m = Matrix::<R>::zeros(self.rows, self.cols);
        for (k, (i, j, v)) in self.entries.iter().enumerate() {
            if *i >= self.rows || *j >= self.cols {
                return Err(CliError::schema(format!("{at}.entries[{k}]"), format!("entry ({i}, {j}) out of range")));
            }
            let x = R::read(v, field, ring).map_err(|e| CliError::schema(format!("{at}.entries[{k}][2]"), e))?;
            m[(*i, *j)] = m[(*i, *j)].clone() + x;
        }
        Ok(m)
    }
}

/// Maps for `iso` and `aut-transfer`. `minus`/`plus` act on the two sides of a
/// pair; `algebra` acts on the Lie superalgebra of a triple.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<MatrixBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus: Option<MatrixBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<MatrixBlock>,
}

/// Coordinates of the ideals `L1`, `L2` in the basis of `instr(V)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub l1: Vec<Vec<String>>,
    pub l2: Vec<Vec<String>>,
}

/// A basis of the submodule `W ⊆ V⁺`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub w: Vec<Vec<String>>,
}

/// Reads an auxiliary file whose optional field must agree with `field`.
pub fn load_aux<T: serde::de::DeserializeOwned>(
    path: &Path,
    field: Field,
    field_of: impl Fn(&T) -> Option<FieldSpec>,
) -> Result<T, CliError> {
    let source = path.display().to_string();
    let value: T = decode(&read(path)?, &source)?;
    if let Some(spec) = field_of(&value) {
        let f = spec.resolve(&source)?;
        if f != field {
            return Err(CliError::schema(format!("{source}: field"), format!("field {f} does not match the object field {field}")));
        }
    }
    Ok(value)
}

/// Parses dense vectors of length `n`.
pub fn vectors(at: &str, field: Field, rows: &[Vec<String>], n: usize) -> Result<Vec<Vec<Scalar>>, CliError> {
    rows.iter()
        .enumerate()
        .map(|(k, row)| {
            if row.len() != n {
                return Err(CliError::schema(format!("{at}[{k}]"), format!("expected {n} coordinates, got {}", row.len())));
            }
            row.iter()
                .enumerate()
                .map(|(c, s)| field.parse(s).map_err(|e| CliError::schema(format!("{at}[{k}][{c}]"), format!("bad scalar {s:?}: {e}"))))
                .collect()
        })
        .collect()
}

/// Parses `t^2 + a1*t + a0` into the ring `F[t]/(t² + a₁t + a₀)`.
pub fn parse_quadratic(text: &str, field: Field) -> Result<Arc<QuadRing>, CliError> {
    let bad = |why: &str| CliError::Usage(format!("bad polynomial {text:?}: {why}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = s.strip_prefix("t^2").ok_or_else(|| bad("must start with t^2"))?;
    let (mut a1, mut a0) = (Scalar::zero(), Scalar::zero());
    let mut terms = Vec::new();
    let mut current = String::new();
    for ch in rest.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    if !current.is_empty() {
        terms.push(current);
    }
    for term in terms {
        let (neg, body) = match term.split_at(1) {
            ("+", b) => (false, b),
            ("-", b) => (true, b),
            _ => return Err(bad("terms must be separated by + or -")),
        };
        let (coeff, linear) = match body.strip_suffix('t') {
            Some(c) => (c.strip_suffix('*').unwrap_or(c), true),
            None => (body, false),
        };
        let c = if coeff.is_empty() && linear {
            Scalar::one()
        } else {
            field.parse(coeff).map_err(|e| bad(&e.to_string()))?
        };
        let c = c.signed(neg);
        if linear {
            a1 = &a1 + &c;
        } else {
            a0 = &a0 + &c;
        }
    }
    Ok(QuadRing::monic(a1, a0))
}

/// Pretty JSON with sorted keys where arrays of scalars stay on one line.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Tuples stay on one line, including tuples with a pair entry like `[0, 1, ["a", "b"]]`.
fn is_inline(items: &[Value]) -> bool {
    let flat = |v: &Value| is_leaf(v) || matches!(v, Value::Array(xs) if xs.iter().all(is_leaf));
    items.iter().all(flat) && items.iter().any(is_leaf)
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_inline(items) => {
            out.push('[');
            for (k, x) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                write_value(x, indent, out);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(x, indent + 2, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 2), Value::String(key.clone()));
                write_value(x, indent + 2, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout() {
        let v: Value = serde_json::from_str(r#"{"b": [[0, 1, "2"]], "a": {"kind": "rational"}, "c": []}"#).unwrap();
        assert_eq!(canonical_json(&v), "{\n  \"a\": {\n    \"kind\": \"rational\"\n  },\n  \"b\": [\n    [0, 1, \"2\"]\n  ],\n  \"c\": []\n}\n");
    }

    #[test]
    fn ring_entries_stay_inline() {
        let v: Value = serde_json::from_str(r#"[[0, 1, ["1", "2"]], [[0, 1]]]"#).unwrap();
        assert_eq!(canonical_json(&v), "[\n  [0, 1, [\"1\", \"2\"]],\n  [\n    [0, 1]\n  ]\n]\n");
    }

    #[test]
    fn field_names() {
        assert_eq!(parse_field_name("rational").unwrap(), Field::Rational);
        assert_eq!(parse_field_name("prime:7").unwrap(), Field::Prime(7));
        assert_eq!(parse_field_name("F_5").unwrap(), Field::Prime(5));
        assert!(parse_field_name("prime:2").is_err());
        assert!(parse_field_name("reals").is_err());
    }

    #[test]
    fn quadratic_polynomials() {
        let r = parse_quadratic("t^2 - 2", Field::Rational).unwrap();
        assert_eq!(r.coefficients(), (Scalar::zero(), Scalar::from(-2)));
        let r = parse_quadratic("t^2+t-3/2", Field::Rational).unwrap();
        assert_eq!(r.coefficients(), (Scalar::one(), Scalar::frac(-3, 2)));
        let r = parse_quadratic("t^2 - 4*t", Field::Rational).unwrap();
        assert_eq!(r.coefficients(), (Scalar::from(-4), Scalar::zero()));
        assert!(parse_quadratic("t^3", Field::Rational).is_err());
        assert!(parse_quadratic("t^2+x", Field::Rational).is_err());
    }

    #[test]
    fn ring_text() {
        let r = QuadRing::dual_numbers();
        let f = Field::Rational;
        assert_eq!(r.elem(Scalar::one(), Scalar::from(-2)).text(f), "1 - 2*t");
        assert_eq!(r.elem(Scalar::zero(), Scalar::frac(1, 2)).text(f), "1/2*t");
        assert_eq!(r.elem(Scalar::from(3), Scalar::zero()).text(f), "3");
    }

    #[test]
    fn residues_for_prime_fields() {
        let f = Field::Prime(7);
        assert_eq!(scalar_text(f, &Scalar::frac(1, 2)).unwrap(), "4");
        assert_eq!(scalar_text(f, &Scalar::from(-1)).unwrap(), "6");
        assert!(scalar_text(f, &Scalar::frac(1, 7)).is_err());
        assert_eq!(scalar_text(Field::Rational, &Scalar::frac(-6, 4)).unwrap(), "-3/2");
    }

    #[test]
    fn located_errors() {
        let src = r#"{"field": {"kind": "rational"}, "gjsp": {"minus": [0], "plus": [0], "products_minus": [[0, 0, 0, 1, "1"]]}}"#;
        let e = parse_object(src, "f.json", Field::Rational).unwrap_err().to_string();
        assert!(e.contains("gjsp.products_minus[0][3]"), "{e}");
        let src = r#"{"field": {"kind": "rational"}, "lie": {"parities": [2]}}"#;
        let e = parse_object(src, "f.json", Field::Rational).unwrap_err().to_string();
        assert!(e.contains("lie.parities[0]"), "{e}");
        let e = parse_object("{\"field\": 3}", "f.json", Field::Rational).unwrap_err().to_string();
        assert!(e.contains("line 1"), "{e}");
    }

    #[test]
    fn default_field_applies_without_descriptor() {
        let src = r#"{"lie": {"parities": [0], "brackets": []}}"#;
        assert_eq!(parse_object(src, "f", Field::Prime(5)).unwrap().field, Field::Prime(5));
    }
}
