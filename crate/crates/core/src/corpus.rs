//! The bundled example corpus: four BL-algebras and eight fuzzy sets with
//! annotated classification claims. The same files live under `corpus/` for
//! use with the `audit` command.

pub const L3_THEN_BOOLEAN: &str = include_str!("../corpus/l3_then_boolean.alg");
pub const BOOLEAN_THEN_L3: &str = include_str!("../corpus/boolean_then_l3.alg");
pub const DIAMOND5: &str = include_str!("../corpus/diamond5.alg");
pub const LUKASIEWICZ4: &str = include_str!("../corpus/lukasiewicz4.alg");

pub const ALGEBRAS: [&str; 4] = [L3_THEN_BOOLEAN, BOOLEAN_THEN_L3, DIAMOND5, LUKASIEWICZ4];

/// `(fuzzy set source, algebra source)` pairs.
pub const FUZZY_SETS: [(&str, &str); 8] = [
    (
        include_str!("../corpus/overline_filter.fz"),
        L3_THEN_BOOLEAN,
    ),
    (
        include_str!("../corpus/thresholds_filter.fz"),
        L3_THEN_BOOLEAN,
    ),
    (
        include_str!("../corpus/overline_implicative.fz"),
        BOOLEAN_THEN_L3,
    ),
    (
        include_str!("../corpus/thresholds_implicative.fz"),
        BOOLEAN_THEN_L3,
    ),
    (
        include_str!("../corpus/overline_positive_implicative.fz"),
        DIAMOND5,
    ),
    (
        include_str!("../corpus/thresholds_positive_implicative.fz"),
        DIAMOND5,
    ),
    (
        include_str!("../corpus/overline_fantastic.fz"),
        LUKASIEWICZ4,
    ),
    (
        include_str!("../corpus/thresholds_fantastic.fz"),
        BOOLEAN_THEN_L3,
    ),
];

/// Path of the corpus directory in the source tree.
pub fn dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}
