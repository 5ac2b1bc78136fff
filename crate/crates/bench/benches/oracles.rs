use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bouquet_core::moves::{simplify, SearchBudget};
use bouquet_core::pretzel::{kn_oracle, tr_oracle};
use bouquet_core::resolution::{weighted_resolution_set, WrsBudget};
use bouquet_core::{PretzelCode, PretzelState};

fn oracles(c: &mut Criterion) {
    for text in ["(5)", "(2,3)", "(1,1,1,3)", "(3,3,3)"] {
        let code = PretzelCode::parse(text).unwrap();
        c.bench_function(&format!("tr_oracle {text}"), |b| b.iter(|| tr_oracle(black_box(&code), 12).unwrap()));
        c.bench_function(&format!("kn_oracle {text}"), |b| b.iter(|| kn_oracle(black_box(&code), 12).unwrap()));
    }
}

fn search(c: &mut Criterion) {
    for text in ["(+-+)", "(+-,-,+)", "(++,+-+)"] {
        let d = PretzelState::parse(text).unwrap().diagram();
        c.bench_function(&format!("simplify {text}"), |b| {
            b.iter(|| simplify(black_box(&d), SearchBudget::default()).unwrap())
        });
    }
}

fn wrs(c: &mut Criterion) {
    for text in ["(+???)", "(??,???)"] {
        let d = PretzelState::parse(text).unwrap().diagram();
        c.bench_function(&format!("wrs {text}"), |b| {
            b.iter(|| weighted_resolution_set(black_box(&d), WrsBudget::default()).unwrap())
        });
    }
}

criterion_group!(benches, oracles, search, wrs);
criterion_main!(benches);
