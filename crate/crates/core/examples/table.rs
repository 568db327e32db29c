//! Drives the command line in-process to print summary tables.

fn main() {
    for args in [
        "lacn table --family w4e --pretty",
        "lacn table --family cm-on-odd --m 3..7 --n 3..7 --pretty",
        "lacn table --family c2m-o2n --m 2..3 --n 1..3 --pretty",
        "lacn table --family b --m 3..4 --n 2..3 --pretty",
    ] {
        println!("$ {args}");
        lacn::cli::run(args.split_whitespace(), &mut std::io::stdout());
        println!();
    }
}
