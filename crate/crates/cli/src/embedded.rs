//! Corpus diagrams and fixture structures compiled into the binary.

pub const DIAGRAMS: &[(&str, &str)] = &[
    ("1_1l.dgm", include_str!("../../../corpus/1_1l.dgm")),
    ("4_1k.dgm", include_str!("../../../corpus/4_1k.dgm")),
    ("5_4k.dgm", include_str!("../../../corpus/5_4k.dgm")),
    ("5k6.dgm", include_str!("../../../corpus/5k6.dgm")),
    ("5k7.dgm", include_str!("../../../corpus/5k7.dgm")),
    ("K1.dgm", include_str!("../../../corpus/K1.dgm")),
    ("K2.dgm", include_str!("../../../corpus/K2.dgm")),
];

pub const FIXTURES: &[(&str, &str)] = &[
    ("one.alg", include_str!("../../../fixtures/one.alg")),
    ("one_psy.alg", include_str!("../../../fixtures/one_psy.alg")),
    ("psy6.alg", include_str!("../../../fixtures/psy6.alg")),
    (
        "psy6_boltzmann.wgt",
        include_str!("../../../fixtures/psy6_boltzmann.wgt"),
    ),
    ("z6_cocycle.wgt", include_str!("../../../fixtures/z6_cocycle.wgt")),
    (
        "z6_constant_r2.alg",
        include_str!("../../../fixtures/z6_constant_r2.alg"),
    ),
    (
        "z6_singquandle.alg",
        include_str!("../../../fixtures/z6_singquandle.alg"),
    ),
    (
        "z8_singquandle.alg",
        include_str!("../../../fixtures/z8_singquandle.alg"),
    ),
    ("z8_z4_shadow.alg", include_str!("../../../fixtures/z8_z4_shadow.alg")),
    (
        "z8_z4_shadow_quad.alg",
        include_str!("../../../fixtures/z8_z4_shadow_quad.alg"),
    ),
    ("z8_z6_shadow.alg", include_str!("../../../fixtures/z8_z6_shadow.alg")),
];

pub fn diagram(name: &str) -> Option<&'static str> {
    DIAGRAMS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}
