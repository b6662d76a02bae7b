//! Ideals shipped with the binary.

/// Names accepted in place of a file path.
pub const NAMES: &[&str] = &["rp2", "moebius", "product"];

/// Source text of a built-in ideal.
pub fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        "rp2" => include_str!("../builtins/rp2.ideal"),
        "moebius" => include_str!("../builtins/moebius.ideal"),
        "product" => include_str!("../builtins/product.ideal"),
        _ => return None,
    })
}
