//! The catalog of named maps. Ids follow equation labels; `eq1*` are the
//! complement maps on the basic families, `prop2*` the complement maps on the
//! l-restricted families, and `eq*inv` the inverses of the bullet maps.

use std::fmt;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Direction, Injectivity, MapHandle};
use crate::error::{Error, Result};
use crate::rational::{Frac, Mat2};
use crate::sequence::SeqSpec;

/// Parameter values for instantiating a catalog entry. Which fields are
/// required depends on the entry's [`ParamFamily`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
}

impl Params {
    pub fn n(n: i64) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn m(m: i64) -> Self {
        Params {
            m: Some(m),
            ..Params::default()
        }
    }

    pub fn nm(n: i64, m: i64) -> Self {
        Params {
            n: Some(n),
            m: Some(m),
            ..Params::default()
        }
    }

    pub fn nml(n: i64, m: i64, l: i64) -> Self {
        Params {
            n: Some(n),
            m: Some(m),
            l: Some(l),
            ..Params::default()
        }
    }

    pub fn ml(m: i64, l: i64) -> Self {
        Params {
            m: Some(m),
            l: Some(l),
            ..Params::default()
        }
    }

    pub fn ms(m: i64, s: i64) -> Self {
        Params {
            m: Some(m),
            s: Some(s),
            ..Params::default()
        }
    }

    // Templates only run after `ParamFamily::check`, so required fields exist.
    fn get_n(&self) -> i64 {
        self.n.expect("n checked")
    }

    fn get_m(&self) -> i64 {
        self.m.expect("m checked")
    }

    fn get_l(&self) -> i64 {
        self.l.expect("l checked")
    }

    /// m·2^(s+extra)
    fn dyadic(&self, extra: i64) -> i64 {
        self.get_m() << (self.s.expect("s checked") + extra)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("n", self.n), ("m", self.m), ("s", self.s), ("l", self.l)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Which parameters an entry takes and which values are admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamFamily {
    /// n ≥ 1
    Order,
    /// 1 ≤ m < n
    Split,
    /// 1 ≤ l ≤ m < n
    SplitLow,
    /// 1 ≤ m ≤ l < n
    SplitHigh,
    /// 1 ≤ l ≤ m, with n = 2m implied
    BalancedLow,
    /// m ≤ l < 2m, with n = 2m implied
    BalancedHigh,
    /// m ≥ 1
    Single,
    /// m ≥ 1, s ≥ 0
    Dyadic,
}

/// Sweep limits for [`ParamFamily::grid`].
#[derive(Debug, Clone, Copy)]
pub struct GridBounds {
    pub max_n: i64,
    pub max_m: i64,
    pub max_s: i64,
}

/// Keeps m·2^(s+2) comfortably inside i64.
const MAX_DYADIC_SHIFT: i64 = 40;

impl ParamFamily {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            ParamFamily::Order => &["n"],
            ParamFamily::Split => &["n", "m"],
            ParamFamily::SplitLow | ParamFamily::SplitHigh => &["n", "m", "l"],
            ParamFamily::BalancedLow | ParamFamily::BalancedHigh => &["m", "l"],
            ParamFamily::Single => &["m"],
            ParamFamily::Dyadic => &["m", "s"],
        }
    }

    pub fn check(self, p: &Params) -> Result<()> {
        let names = self.names();
        let given = [("n", p.n), ("m", p.m), ("s", p.s), ("l", p.l)];
        for (name, value) in given {
            if value.is_some() != names.contains(&name) {
                return Err(Error::Spec(format!(
                    "expected parameters {}, got {{{p}}}",
                    names.join(", ")
                )));
            }
        }
        let (n, m, s, l) = (
            p.n.unwrap_or(0),
            p.m.unwrap_or(0),
            p.s.unwrap_or(0),
            p.l.unwrap_or(0),
        );
        let ok = match self {
            ParamFamily::Order => n >= 1,
            ParamFamily::Split => 1 <= m && m < n,
            ParamFamily::SplitLow => 1 <= l && l <= m && m < n,
            ParamFamily::SplitHigh => 1 <= m && m <= l && l < n,
            ParamFamily::BalancedLow => 1 <= l && l <= m && m <= i64::MAX / 2,
            ParamFamily::BalancedHigh => 1 <= m && m <= l && l < 2 * m.min(i64::MAX / 2),
            ParamFamily::Single => (1..=i64::MAX / 2).contains(&m),
            ParamFamily::Dyadic => {
                m >= 1
                    && (0..=MAX_DYADIC_SHIFT).contains(&s)
                    && m.checked_mul(1 << (s + 2)).is_some()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Spec(format!(
                "parameters {{{p}}} are outside the admissible range"
            )))
        }
    }

    /// Every admissible parameter set within the bounds.
    pub fn grid(self, b: GridBounds) -> Vec<Params> {
        let mut out = Vec::new();
        match self {
            ParamFamily::Order => out.extend((1..=b.max_n).map(Params::n)),
            ParamFamily::Split => {
                for n in 2..=b.max_n {
                    out.extend((1..n).map(|m| Params::nm(n, m)));
                }
            }
            ParamFamily::SplitLow | ParamFamily::SplitHigh => {
                for n in 2..=b.max_n {
                    for m in 1..n {
                        let ls = if self == ParamFamily::SplitLow {
                            1..=m
                        } else {
                            m..=n - 1
                        };
                        out.extend(ls.map(|l| Params::nml(n, m, l)));
                    }
                }
            }
            ParamFamily::BalancedLow | ParamFamily::BalancedHigh => {
                for m in 1..=b.max_n / 2 {
                    let ls = if self == ParamFamily::BalancedLow {
                        1..=m
                    } else {
                        m..=2 * m - 1
                    };
                    out.extend(ls.map(|l| Params::ml(m, l)));
                }
            }
            ParamFamily::Single => out.extend((1..=b.max_m).map(Params::m)),
            ParamFamily::Dyadic => {
                for m in 1..=b.max_m {
                    out.extend((0..=b.max_s).map(|s| Params::ms(m, s)));
                }
            }
        }
        out
    }
}

/// A named, parametrized sequence spec.
#[derive(Clone, Copy)]
pub struct Template {
    pub name: &'static str,
    build: fn(&Params) -> SeqSpec,
}

impl Template {
    /// Builds the spec; `p` must already satisfy the entry's family.
    pub fn instantiate(&self, p: &Params) -> SeqSpec {
        (self.build)(p)
    }
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl PartialEq for Template {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Template {}

macro_rules! template {
    ($name:expr, |$p:ident| $body:expr) => {
        Template {
            name: $name,
            build: |$p: &Params| $body,
        }
    };
}

const LL: Mat2 = Mat2::raw(1, 0, 2, 1);
const LR: Mat2 = Mat2::raw(0, 1, -1, 3);
const RL: Mat2 = Mat2::raw(1, 1, 1, 2);
const RR: Mat2 = Mat2::raw(-1, 2, -2, 3);

const FULL_N: Template = template!("full(n)", |p| SeqSpec::full(p.get_n()));
const UPPER: Template = template!("upper(n,m)", |p| SeqSpec::upper(p.get_n(), p.get_m()));
const LOWER: Template = template!("lower(n,m)", |p| SeqSpec::lower(p.get_n(), p.get_m()));
const UPPER_CO: Template = template!("upper(n,n-m)", |p| SeqSpec::upper(
    p.get_n(),
    p.get_n() - p.get_m()
));
const LOWER_CO: Template = template!("lower(n,n-m)", |p| SeqSpec::lower(
    p.get_n(),
    p.get_n() - p.get_m()
));
const BOOL: Template = template!("bool(n,m)", |p| SeqSpec::boolean(p.get_n(), p.get_m()));
const BOOL_CO: Template = template!("bool(n,n-m)", |p| SeqSpec::boolean(
    p.get_n(),
    p.get_n() - p.get_m()
));
const BOOL_F: Template = template!("bool_f(n,m,l)", |p| SeqSpec::bool_f(
    p.get_n(),
    p.get_m(),
    p.get_l()
));
const BOOL_F_CO: Template = template!("bool_f(n,n-l,n-m)", |p| {
    let n = p.get_n();
    SeqSpec::bool_f(n, n - p.get_l(), n - p.get_m())
});
const BOOL_G: Template = template!("bool_g(n,m,l)", |p| SeqSpec::bool_g(
    p.get_n(),
    p.get_m(),
    p.get_l()
));
const BOOL_G_CO: Template = template!("bool_g(n,n-l,n-m)", |p| {
    let n = p.get_n();
    SeqSpec::bool_g(n, n - p.get_l(), n - p.get_m())
});
const BOOL_F_2M: Template = template!("bool_f(2m,m,l)", |p| SeqSpec::bool_f(
    2 * p.get_m(),
    p.get_m(),
    p.get_l()
));
const BOOL_F_2M_CO: Template = template!("bool_f(2m,2m-l,m)", |p| {
    let m = p.get_m();
    SeqSpec::bool_f(2 * m, 2 * m - p.get_l(), m)
});
const BOOL_G_2M: Template = template!("bool_g(2m,m,l)", |p| SeqSpec::bool_g(
    2 * p.get_m(),
    p.get_m(),
    p.get_l()
));
const BOOL_G_2M_CO: Template = template!("bool_g(2m,2m-l,m)", |p| {
    let m = p.get_m();
    SeqSpec::bool_g(2 * m, 2 * m - p.get_l(), m)
});

const FULL_M: Template = template!("full(m)", |p| SeqSpec::full(p.get_m()));
const LOW_2M: Template = template!("half_low(bool(2m,m))", |p| SeqSpec::boolean(
    2 * p.get_m(),
    p.get_m()
)
.half_low());
const HIGH_2M: Template = template!("half_high(bool(2m,m))", |p| SeqSpec::boolean(
    2 * p.get_m(),
    p.get_m()
)
.half_high());

const FULL_DY: Template = template!("full(2^s·m)", |p| SeqSpec::full(p.dyadic(0)));
const LOW_NEXT: Template = template!("half_low(bool(2^(s+1)·m,2^s·m))", |p| {
    SeqSpec::boolean(p.dyadic(1), p.dyadic(0)).half_low()
});
const HIGH_NEXT: Template = template!("half_high(bool(2^(s+1)·m,2^s·m))", |p| {
    SeqSpec::boolean(p.dyadic(1), p.dyadic(0)).half_high()
});
const LOW_TOP: Template = template!("half_low(bool(2^(s+2)·m,2^(s+1)·m))", |p| {
    SeqSpec::boolean(p.dyadic(2), p.dyadic(1)).half_low()
});
const HIGH_TOP: Template = template!("half_high(bool(2^(s+2)·m,2^(s+1)·m))", |p| {
    SeqSpec::boolean(p.dyadic(2), p.dyadic(1)).half_high()
});
const IMG_LL: Template = template!("image(LL,full(2^s·m))", |p| SeqSpec::full(p.dyadic(0))
    .image(LL));
const IMG_LR: Template = template!("image(LR,full(2^s·m))", |p| SeqSpec::full(p.dyadic(0))
    .image(LR));
const IMG_RL: Template = template!("image(RL,full(2^s·m))", |p| SeqSpec::full(p.dyadic(0))
    .image(RL));
const IMG_RR: Template = template!("image(RR,full(2^s·m))", |p| SeqSpec::full(p.dyadic(0))
    .image(RR));

/// One catalog entry: a matrix with its declared behaviour between two
/// parametrized families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapEntry {
    pub id: &'static str,
    pub matrix: Mat2,
    pub direction: Direction,
    pub injectivity: Injectivity,
    pub family: ParamFamily,
    pub domain: Template,
    pub codomain: Template,
    /// Documented images x ↦ matrix·x.
    pub endpoints: Vec<(Frac, Frac)>,
    /// Checked whenever it is a term of the instantiated domain.
    pub fixed_point: Option<Frac>,
}

impl MapEntry {
    pub fn instantiate(&self, p: &Params) -> Result<MapHandle> {
        self.family.check(p)?;
        let domain = self.domain.instantiate(p);
        let fixed_point = self.fixed_point.filter(|x| domain.contains(*x));
        Ok(MapHandle {
            label: format!("{}[{p}]", self.id),
            matrix: self.matrix,
            direction: self.direction,
            injectivity: self.injectivity,
            codomain: self.codomain.instantiate(p),
            domain,
            endpoints: self.endpoints.clone(),
            fixed_point,
            degenerate: false,
        })
    }
}

impl Serialize for MapEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let endpoints: Vec<[String; 2]> = self
            .endpoints
            .iter()
            .map(|(x, y)| [x.to_string(), y.to_string()])
            .collect();
        let mut st = serializer.serialize_struct("MapEntry", 9)?;
        st.serialize_field("id", self.id)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.serialize_field("direction", &self.direction)?;
        st.serialize_field("injectivity", &self.injectivity)?;
        st.serialize_field("params", self.family.names())?;
        st.serialize_field("domain", self.domain.name)?;
        st.serialize_field("codomain", self.codomain.name)?;
        st.serialize_field("endpoints", &endpoints)?;
        st.serialize_field("fixed_point", &self.fixed_point)?;
        st.end()
    }
}

/// All catalog entries, built on first use.
pub fn registry() -> &'static [MapEntry] {
    static REGISTRY: OnceLock<Vec<MapEntry>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn find(id: &str) -> Result<&'static MapEntry> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownMap(id.to_string()))
}

const fn f(h: i64, k: i64) -> Frac {
    Frac::from_reduced(h, k)
}

type Ends<'a> = &'a [((i64, i64), (i64, i64))];

struct Row<'a> {
    id: &'static str,
    m: [i64; 4],
    dir: Direction,
    inj: Injectivity,
    family: ParamFamily,
    domain: Template,
    codomain: Template,
    ends: Ends<'a>,
    fixed: Option<(i64, i64)>,
}

impl Row<'_> {
    fn build(self) -> MapEntry {
        let [a, b, c, d] = self.m;
        MapEntry {
            id: self.id,
            matrix: Mat2::new(a, b, c, d).expect("catalog matrices are unimodular"),
            direction: self.dir,
            injectivity: self.inj,
            family: self.family,
            domain: self.domain,
            codomain: self.codomain,
            endpoints: self
                .ends
                .iter()
                .map(|&((a, b), (c, d))| (f(a, b), f(c, d)))
                .collect(),
            fixed_point: self.fixed.map(|(h, k)| f(h, k)),
        }
    }
}

fn build() -> Vec<MapEntry> {
    use Direction::{Preserving as P, Reversing as V};
    use Injectivity::{Bijective as B, Injective as I};
    use ParamFamily::*;

    const J: [i64; 4] = [-1, 1, 0, 1];
    const L: [i64; 4] = [1, 0, 1, 1];
    const R: [i64; 4] = [0, 1, -1, 2];

    let row = |id, m, dir, inj, family, domain, codomain, ends: Ends<'static>| Row {
        id,
        m,
        dir,
        inj,
        family,
        domain,
        codomain,
        ends,
        fixed: None,
    };
    let mut rows: Vec<Row<'static>> = vec![
        // The complement h/k ↦ (k−h)/k on the basic families.
        row(
            "eq1",
            J,
            V,
            B,
            Order,
            FULL_N,
            FULL_N,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "eq1b",
            J,
            V,
            B,
            Split,
            UPPER,
            LOWER_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "eq1c",
            J,
            V,
            B,
            Split,
            LOWER,
            UPPER_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "eq1d",
            J,
            V,
            B,
            Split,
            BOOL,
            BOOL_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        // ... and on the l-restricted ones.
        row(
            "prop2a",
            J,
            V,
            B,
            SplitLow,
            BOOL_F,
            BOOL_F_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "prop2b",
            J,
            V,
            B,
            BalancedLow,
            BOOL_F_2M,
            BOOL_F_2M_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "prop2c",
            J,
            V,
            B,
            SplitHigh,
            BOOL_G,
            BOOL_G_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        row(
            "prop2d",
            J,
            V,
            B,
            BalancedHigh,
            BOOL_G_2M,
            BOOL_G_2M_CO,
            &[((0, 1), (1, 1)), ((1, 1), (0, 1))],
        ),
        // Full(m) and the two halves of bool(2m, m).
        row("eq4", L, P, B, Single, FULL_M, LOW_2M, &[]),
        row("eq15", R, P, B, Single, FULL_M, HIGH_2M, &[]),
        row("eq4inv", [1, 0, -1, 1], P, B, Single, LOW_2M, FULL_M, &[]),
        row("eq15inv", [2, -1, 1, 0], P, B, Single, HIGH_2M, FULL_M, &[]),
        row("eq16", [-1, 1, -1, 2], V, B, Single, FULL_M, LOW_2M, &[]),
        row("eq5", [0, 1, 1, 1], V, B, Single, FULL_M, HIGH_2M, &[]),
        row("eq16inv", [-2, 1, -1, 1], V, B, Single, LOW_2M, FULL_M, &[]),
        row("eq5inv", [-1, 1, 1, 0], V, B, Single, HIGH_2M, FULL_M, &[]),
        row("eq6", [-2, 1, -3, 2], V, B, Single, LOW_2M, LOW_2M, &[]),
        row("eq7", [1, 0, 3, -1], V, B, Single, HIGH_2M, HIGH_2M, &[]),
        row("eq8", [-1, 1, -3, 2], P, B, Single, LOW_2M, HIGH_2M, &[]),
        row("eq9", [2, -1, 3, -1], P, B, Single, HIGH_2M, LOW_2M, &[]),
        // Full(2^s·m) into the halves of bool(2^(s+2)·m, 2^(s+1)·m).
        row(
            "eq74",
            [1, 0, 2, 1],
            P,
            I,
            Dyadic,
            FULL_DY,
            LOW_TOP,
            &[((0, 1), (0, 1)), ((1, 1), (1, 3))],
        ),
        row(
            "eq75",
            [0, 1, -1, 3],
            P,
            I,
            Dyadic,
            FULL_DY,
            LOW_TOP,
            &[((0, 1), (1, 3)), ((1, 1), (1, 2))],
        ),
        row(
            "eq76",
            [1, 1, 1, 2],
            P,
            I,
            Dyadic,
            FULL_DY,
            HIGH_TOP,
            &[((0, 1), (1, 2)), ((1, 1), (2, 3))],
        ),
        row(
            "eq77",
            [-1, 2, -2, 3],
            P,
            I,
            Dyadic,
            FULL_DY,
            HIGH_TOP,
            &[((0, 1), (2, 3)), ((1, 1), (1, 1))],
        ),
        row(
            "eq78",
            [-1, 1, -2, 3],
            V,
            I,
            Dyadic,
            FULL_DY,
            LOW_TOP,
            &[((0, 1), (1, 3)), ((1, 1), (0, 1))],
        ),
        row(
            "eq79",
            [0, 1, 1, 2],
            V,
            I,
            Dyadic,
            FULL_DY,
            LOW_TOP,
            &[((0, 1), (1, 2)), ((1, 1), (1, 3))],
        ),
        row(
            "eq80",
            [-1, 2, -1, 3],
            V,
            I,
            Dyadic,
            FULL_DY,
            HIGH_TOP,
            &[((0, 1), (2, 3)), ((1, 1), (1, 2))],
        ),
        row(
            "eq81",
            [1, 1, 2, 1],
            V,
            I,
            Dyadic,
            FULL_DY,
            HIGH_TOP,
            &[((0, 1), (1, 1)), ((1, 1), (2, 3))],
        ),
        // Halves of bool(2^(s+1)·m, 2^s·m) into halves of bool(2^(s+2)·m, 2^(s+1)·m).
        row(
            "eq17",
            L,
            P,
            I,
            Dyadic,
            LOW_NEXT,
            LOW_TOP,
            &[((0, 1), (0, 1)), ((1, 2), (1, 3))],
        ),
        row(
            "eq18",
            [2, -1, 5, -2],
            P,
            I,
            Dyadic,
            HIGH_NEXT,
            LOW_TOP,
            &[((1, 2), (0, 1)), ((1, 1), (1, 3))],
        ),
        row(
            "eq21",
            [-1, 1, -4, 3],
            P,
            I,
            Dyadic,
            LOW_NEXT,
            LOW_TOP,
            &[((0, 1), (1, 3)), ((1, 2), (1, 2))],
        ),
        row(
            "eq22",
            L,
            P,
            I,
            Dyadic,
            HIGH_NEXT,
            LOW_TOP,
            &[((1, 2), (1, 3)), ((1, 1), (1, 2))],
        ),
        row(
            "eq23",
            R,
            P,
            I,
            Dyadic,
            LOW_NEXT,
            HIGH_TOP,
            &[((0, 1), (1, 2)), ((1, 2), (2, 3))],
        ),
        row(
            "eq24",
            [3, -1, 4, -1],
            P,
            I,
            Dyadic,
            HIGH_NEXT,
            HIGH_TOP,
            &[((1, 2), (1, 2)), ((1, 1), (2, 3))],
        ),
        row(
            "eq25",
            [-3, 2, -5, 3],
            P,
            I,
            Dyadic,
            LOW_NEXT,
            HIGH_TOP,
            &[((0, 1), (2, 3)), ((1, 2), (1, 1))],
        ),
        row(
            "eq26",
            R,
            P,
            I,
            Dyadic,
            HIGH_NEXT,
            HIGH_TOP,
            &[((1, 2), (2, 3)), ((1, 1), (1, 1))],
        ),
        row(
            "eq27",
            [-2, 1, -5, 3],
            V,
            I,
            Dyadic,
            LOW_NEXT,
            LOW_TOP,
            &[((1, 2), (0, 1)), ((0, 1), (1, 3))],
        ),
        row(
            "eq28",
            [-1, 1, -1, 2],
            V,
            I,
            Dyadic,
            HIGH_NEXT,
            LOW_TOP,
            &[((1, 1), (0, 1)), ((1, 2), (1, 3))],
        ),
        row(
            "eq29",
            [-1, 1, -1, 2],
            V,
            I,
            Dyadic,
            LOW_NEXT,
            LOW_TOP,
            &[((1, 2), (1, 3)), ((0, 1), (1, 2))],
        ),
        row(
            "eq30",
            [1, 0, 4, -1],
            V,
            I,
            Dyadic,
            HIGH_NEXT,
            LOW_TOP,
            &[((1, 1), (1, 3)), ((1, 2), (1, 2))],
        ),
        row(
            "eq31",
            [-3, 2, -4, 3],
            V,
            I,
            Dyadic,
            LOW_NEXT,
            HIGH_TOP,
            &[((1, 2), (1, 2)), ((0, 1), (2, 3))],
        ),
        row(
            "eq32",
            [0, 1, 1, 1],
            V,
            I,
            Dyadic,
            HIGH_NEXT,
            HIGH_TOP,
            &[((1, 1), (1, 2)), ((1, 2), (2, 3))],
        ),
        row(
            "eq33",
            [0, 1, 1, 1],
            V,
            I,
            Dyadic,
            LOW_NEXT,
            HIGH_TOP,
            &[((1, 2), (2, 3)), ((0, 1), (1, 1))],
        ),
        row(
            "eq34",
            [3, -1, 5, -2],
            V,
            I,
            Dyadic,
            HIGH_NEXT,
            HIGH_TOP,
            &[((1, 1), (2, 3)), ((1, 2), (1, 1))],
        ),
        // Between the images of full(2^s·m) under LL, LR, RL and RR.
        row(
            "eq35",
            [-2, 1, -7, 3],
            P,
            B,
            Dyadic,
            IMG_LL,
            IMG_LR,
            &[((0, 1), (1, 3)), ((1, 3), (1, 2))],
        ),
        row(
            "eq36",
            [-1, 1, -3, 2],
            P,
            B,
            Dyadic,
            IMG_LL,
            IMG_RL,
            &[((0, 1), (1, 2)), ((1, 3), (2, 3))],
        ),
        row(
            "eq37",
            [-5, 2, -8, 3],
            P,
            B,
            Dyadic,
            IMG_LL,
            IMG_RR,
            &[((0, 1), (2, 3)), ((1, 3), (1, 1))],
        ),
        row(
            "eq38",
            [3, -1, 7, -2],
            P,
            B,
            Dyadic,
            IMG_LR,
            IMG_LL,
            &[((1, 3), (0, 1)), ((1, 2), (1, 3))],
        ),
        row(
            "eq39",
            [4, -1, 5, -1],
            P,
            B,
            Dyadic,
            IMG_LR,
            IMG_RL,
            &[((1, 3), (1, 2)), ((1, 2), (2, 3))],
        ),
        row(
            "eq40",
            [-1, 1, -3, 2],
            P,
            B,
            Dyadic,
            IMG_LR,
            IMG_RR,
            &[((1, 3), (2, 3)), ((1, 2), (1, 1))],
        ),
        row(
            "eq41",
            [2, -1, 3, -1],
            P,
            B,
            Dyadic,
            IMG_RL,
            IMG_LL,
            &[((1, 2), (0, 1)), ((2, 3), (1, 3))],
        ),
        row(
            "eq42",
            [-1, 1, -5, 4],
            P,
            B,
            Dyadic,
            IMG_RL,
            IMG_LR,
            &[((1, 2), (1, 3)), ((2, 3), (1, 2))],
        ),
        row(
            "eq43",
            [-4, 3, -7, 5],
            P,
            B,
            Dyadic,
            IMG_RL,
            IMG_RR,
            &[((1, 2), (2, 3)), ((2, 3), (1, 1))],
        ),
        row(
            "eq44",
            [3, -2, 8, -5],
            P,
            B,
            Dyadic,
            IMG_RR,
            IMG_LL,
            &[((2, 3), (0, 1)), ((1, 1), (1, 3))],
        ),
        row(
            "eq45",
            [2, -1, 3, -1],
            P,
            B,
            Dyadic,
            IMG_RR,
            IMG_LR,
            &[((2, 3), (1, 3)), ((1, 1), (1, 2))],
        ),
        row(
            "eq46",
            [5, -3, 7, -4],
            P,
            B,
            Dyadic,
            IMG_RR,
            IMG_RL,
            &[((2, 3), (1, 2)), ((1, 1), (2, 3))],
        ),
        row(
            "eq47",
            [-2, 1, -3, 2],
            V,
            B,
            Dyadic,
            IMG_LL,
            IMG_LR,
            &[((0, 1), (1, 2)), ((1, 3), (1, 3))],
        ),
        row(
            "eq48",
            [-5, 2, -7, 3],
            V,
            B,
            Dyadic,
            IMG_LL,
            IMG_RL,
            &[((0, 1), (2, 3)), ((1, 3), (1, 2))],
        ),
        row(
            "eq49",
            J,
            V,
            B,
            Dyadic,
            IMG_LL,
            IMG_RR,
            &[((0, 1), (1, 1)), ((1, 3), (2, 3))],
        ),
        row(
            "eq50",
            [-2, 1, -3, 2],
            V,
            B,
            Dyadic,
            IMG_LR,
            IMG_LL,
            &[((1, 3), (1, 3)), ((1, 2), (0, 1))],
        ),
        row(
            "eq51",
            J,
            V,
            B,
            Dyadic,
            IMG_LR,
            IMG_RL,
            &[((1, 3), (2, 3)), ((1, 2), (1, 2))],
        ),
        row(
            "eq52",
            [4, -1, 7, -2],
            V,
            B,
            Dyadic,
            IMG_LR,
            IMG_RR,
            &[((1, 3), (1, 1)), ((1, 2), (2, 3))],
        ),
        row(
            "eq53",
            [-3, 2, -7, 5],
            V,
            B,
            Dyadic,
            IMG_RL,
            IMG_LL,
            &[((1, 2), (1, 3)), ((2, 3), (0, 1))],
        ),
        row(
            "eq54",
            J,
            V,
            B,
            Dyadic,
            IMG_RL,
            IMG_LR,
            &[((1, 2), (1, 2)), ((2, 3), (1, 3))],
        ),
        row(
            "eq55",
            [1, 0, 3, -1],
            V,
            B,
            Dyadic,
            IMG_RL,
            IMG_RR,
            &[((1, 2), (1, 1)), ((2, 3), (2, 3))],
        ),
        row(
            "eq56",
            J,
            V,
            B,
            Dyadic,
            IMG_RR,
            IMG_LL,
            &[((2, 3), (1, 3)), ((1, 1), (0, 1))],
        ),
        row(
            "eq57",
            [2, -1, 7, -4],
            V,
            B,
            Dyadic,
            IMG_RR,
            IMG_LR,
            &[((2, 3), (1, 2)), ((1, 1), (1, 3))],
        ),
        row(
            "eq58",
            [1, 0, 3, -1],
            V,
            B,
            Dyadic,
            IMG_RR,
            IMG_RL,
            &[((2, 3), (2, 3)), ((1, 1), (1, 2))],
        ),
    ];

    // Reversing involutions of each image onto itself, fixing its middle term.
    type SelfMap = (&'static str, [i64; 4], Template, Ends<'static>, (i64, i64));
    let selfmaps: [SelfMap; 4] = [
        (
            "eq59",
            [-3, 1, -8, 3],
            IMG_LL,
            &[((0, 1), (1, 3)), ((1, 4), (1, 4)), ((1, 3), (0, 1))],
            (1, 4),
        ),
        (
            "eq60",
            [1, 0, 5, -1],
            IMG_LR,
            &[((1, 3), (1, 2)), ((2, 5), (2, 5)), ((1, 2), (1, 3))],
            (2, 5),
        ),
        (
            "eq61",
            [-4, 3, -5, 4],
            IMG_RL,
            &[((1, 2), (2, 3)), ((3, 5), (3, 5)), ((2, 3), (1, 2))],
            (3, 5),
        ),
        (
            "eq62",
            [5, -3, 8, -5],
            IMG_RR,
            &[((2, 3), (1, 1)), ((3, 4), (3, 4)), ((1, 1), (2, 3))],
            (3, 4),
        ),
    ];
    for (id, m, t, ends, fixed) in selfmaps {
        rows.push(Row {
            fixed: Some(fixed),
            ..row(id, m, V, B, Dyadic, t, t, ends)
        });
    }

    rows.into_iter().map(Row::build).collect()
}
