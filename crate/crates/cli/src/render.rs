use reslat_core::{ResLattice, Report};

use crate::TableFormat;

pub fn print_report(report: &Report) {
    print!("{report}");
}

pub fn print_tables(rl: &ResLattice, format: TableFormat) {
    let n = rl.size();
    let leq = |x: usize, y: usize| if rl.leq(x, y) { "1" } else { "0" }.to_string();
    let odot = |x: usize, y: usize| rl.name(rl.odot(x, y)).to_string();
    let imp = |x: usize, y: usize| rl.name(rl.imp(x, y)).to_string();
    let blocks: [(&str, &dyn Fn(usize, usize) -> String); 3] =
        [("leq", &leq), ("odot", &odot), ("imp", &imp)];
    match format {
        TableFormat::Csv => {
            for (block, cell) in blocks {
                println!("{block},{}", rl.names().join(","));
                for x in 0..n {
                    let row: Vec<String> = (0..n).map(|y| cell(x, y)).collect();
                    println!("{},{}", rl.name(x), row.join(","));
                }
            }
        }
        TableFormat::Text => {
            let width = rl.names().iter().map(String::len).max().unwrap_or(1);
            for (block, cell) in blocks {
                println!("{block}");
                let head: Vec<String> = rl.names().iter().map(|s| format!("{s:>width$}")).collect();
                println!("{:>width$} | {}", "", head.join(" "));
                for x in 0..n {
                    let row: Vec<String> = (0..n).map(|y| format!("{:>width$}", cell(x, y))).collect();
                    println!("{:>width$} | {}", rl.name(x), row.join(" "));
                }
            }
        }
    }
}
