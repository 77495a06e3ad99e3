// hilbert3 — command-line front end for the 3D Hilbert curve library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
// Records go to stdout; diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert3/hilbert3.hpp"

namespace {

enum class OutputFormat { plain, csv, jsonl };

const std::map<std::string, OutputFormat> kFormatNames{
    {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"jsonl", OutputFormat::jsonl}};

std::string to_octal(std::uint64_t v) {
    std::ostringstream os;
    os << std::oct << v;
    return os.str();
}

// Emits records with a fixed field list in one of the three formats.
// Values are JSON scalars; strings print bare in plain/csv output.
class RecordWriter {
  public:
    RecordWriter(std::ostream& out, OutputFormat format, std::vector<std::string> fields)
        : out_(out), format_(format), fields_(std::move(fields)) {
        if (format_ == OutputFormat::csv) {
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i) out_ << ',';
                out_ << fields_[i];
            }
            out_ << '\n';
        }
    }

    void write(const std::vector<nlohmann::ordered_json>& values) {
        const char sep = format_ == OutputFormat::csv ? ',' : ' ';
        switch (format_) {
            case OutputFormat::plain:
            case OutputFormat::csv:
                for (std::size_t i = 0; i < values.size(); ++i) {
                    if (i) out_ << sep;
                    if (values[i].is_string())
                        out_ << values[i].get_ref<const std::string&>();
                    else
                        out_ << values[i].dump();
                }
                out_ << '\n';
                break;
            case OutputFormat::jsonl: {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < values.size(); ++i) obj[fields_[i]] = values[i];
                out_ << obj.dump() << '\n';
                break;
            }
        }
    }

  private:
    std::ostream& out_;
    OutputFormat format_;
    std::vector<std::string> fields_;
};

int run_encode(std::uint32_t x, std::uint32_t y, std::uint32_t z, int depth, bool octal,
               OutputFormat format) {
    const hilbert3::HilbertIndex h = hilbert3::encode({x, y, z}, hilbert3::Depth(depth));
    RecordWriter writer(std::cout, format, {"h"});
    if (octal)
        writer.write({to_octal(h)});
    else
        writer.write({h});
    return 0;
}

int run_decode(std::uint64_t h, int depth, OutputFormat format) {
    const hilbert3::Point3 p = hilbert3::decode(h, hilbert3::Depth(depth));
    RecordWriter writer(std::cout, format, {"x", "y", "z"});
    writer.write({p.x, p.y, p.z});
    return 0;
}

int run_path(int depth, const std::string& source, OutputFormat format) {
    RecordWriter writer(std::cout, format, {"h", "x", "y", "z"});
    if (source == "oracle") {
        if (depth > hilbert3::kMaxWalkDepth)
            throw hilbert3::usage_error("--source oracle supports --depth at most " +
                                        std::to_string(hilbert3::kMaxWalkDepth));
        hilbert3::CurveWalker walker(depth);
        std::uint64_t h = 0;
        while (auto p = walker.next()) writer.write({h++, p->x, p->y, p->z});
    } else {
        const hilbert3::Depth d(depth);
        for (std::uint64_t h = 0; h < d.cells(); ++h) {
            const hilbert3::Point3 p = hilbert3::decode(h, d);
            writer.write({h, p.x, p.y, p.z});
        }
    }
    return 0;
}

int run_verify(int depth, bool inject_fault) {
    const hilbert3::CheckSubjects subjects =
        inject_fault ? hilbert3::faulty_table_subjects() : hilbert3::CheckSubjects{};
    const auto results = hilbert3::run_all_checks(hilbert3::Depth(depth), subjects);
    int failed_checks = 0;
    for (const auto& r : results) {
        std::cout << r.name << ": checked " << r.checked << ", failed " << r.failed << '\n';
        if (!r.passed()) {
            ++failed_checks;
            for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
        }
    }
    if (failed_checks == 0) {
        std::cout << "all checks passed\n";
        return 0;
    }
    std::cout << failed_checks << " of " << results.size() << " checks failed\n";
    return 1;
}

int run_reorder(const std::string& input, const std::string& output, const std::string& direction) {
    constexpr int kMaxReorderDepth = 8;  // keeps the two in-memory copies modest
    const hilbert3::CubeArray in = hilbert3::read_cube(input, kMaxReorderDepth);
    const bool to_hilbert = direction == "to-hilbert";
    const hilbert3::Layout wanted =
        to_hilbert ? hilbert3::Layout::row_major : hilbert3::Layout::hilbert;
    if (in.layout != wanted)
        throw hilbert3::usage_error(
            "--direction " + direction + " expects a " +
            (to_hilbert ? std::string("row_major") : std::string("hilbert")) +
            " input, but " + input + " is in " +
            (in.layout == hilbert3::Layout::hilbert ? "hilbert" : "row_major") + " layout");
    hilbert3::write_cube(output,
                         to_hilbert ? hilbert3::to_hilbert_order(in) : hilbert3::from_hilbert_order(in));
    return 0;
}

int run_partition(int depth, std::uint64_t parts, OutputFormat format) {
    const hilbert3::Depth d(depth);
    const hilbert3::Partition plan = hilbert3::partition(d, parts);
    RecordWriter writer(std::cout, format,
                        {"part", "h_begin", "h_end", "count", "bbox_volume", "surface"});
    for (std::size_t i = 0; i < plan.parts(); ++i) {
        const std::uint64_t begin = plan.boundaries[i];
        const std::uint64_t end = plan.boundaries[i + 1];
        const hilbert3::PartitionStats stats = hilbert3::partition_stats(d, begin, end);
        writer.write({i, begin, end, stats.cell_count, stats.bbox_volume, stats.surface_area});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"3D Hilbert curve tools: encode/decode, curve emission, self-verification, "
                 "and Hilbert-order data utilities"};
    app.require_subcommand(1);
    int rc = 0;

    OutputFormat format = OutputFormat::plain;
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
            ->default_str("plain");
    };

    // encode
    std::uint32_t x = 0, y = 0, z = 0;
    std::uint64_t h = 0;
    int depth = 1;
    bool octal = false;
    auto* enc = app.add_subcommand("encode", "map a lattice point to its Hilbert index");
    enc->add_option("x", x, "x coordinate")->required();
    enc->add_option("y", y, "y coordinate")->required();
    enc->add_option("z", z, "z coordinate")->required();
    enc->add_option("-r,--depth", depth, "curve depth (side 2^r)")
        ->required()
        ->check(CLI::Range(1, hilbert3::kMaxDepth));
    enc->add_flag("--octal", octal, "print the index in octal digits");
    add_format(enc);
    enc->callback([&] { rc = run_encode(x, y, z, depth, octal, format); });

    // decode
    auto* dec = app.add_subcommand("decode", "map a Hilbert index back to its lattice point");
    dec->add_option("index", h, "Hilbert index")->required();
    dec->add_option("-r,--depth", depth, "curve depth (side 2^r)")
        ->required()
        ->check(CLI::Range(1, hilbert3::kMaxDepth));
    add_format(dec);
    dec->callback([&] { rc = run_decode(h, depth, format); });

    // path
    std::string source = "decode";
    bool oracle_flag = false;
    auto* path = app.add_subcommand("path", "emit the full curve in index order");
    path->add_option("-r,--depth", depth, "curve depth")->required()->check(CLI::Range(1, 10));
    auto* source_opt = path->add_option("--source", source, "point generator")
                           ->check(CLI::IsMember({"decode", "oracle"}))
                           ->default_str("decode");
    path->add_flag("--oracle", oracle_flag, "shorthand for --source oracle")->excludes(source_opt);
    add_format(path);
    path->callback([&] { rc = run_path(depth, oracle_flag ? "oracle" : source, format); });

    // verify
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the exhaustive invariant checks");
    verify->add_option("-r,--depth", depth, "depth for the exhaustive sweeps")
        ->required()
        ->check(CLI::Range(1, 4));
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden
    verify->callback([&] { rc = run_verify(depth, inject_fault); });

    // reorder
    std::string input, output, direction;
    auto* reorder = app.add_subcommand("reorder", "rewrite a cube file in the other layout");
    reorder->add_option("input", input, "input cube file")->required();
    reorder->add_option("output", output, "output cube file")->required();
    reorder->add_option("--direction", direction, "conversion direction")
        ->required()
        ->check(CLI::IsMember({"to-hilbert", "to-row-major"}));
    reorder->callback([&] { rc = run_reorder(input, output, direction); });

    // partition
    std::uint64_t parts = 1;
    auto* part = app.add_subcommand("partition", "split the curve into contiguous parts");
    part->add_option("-r,--depth", depth, "curve depth")->required()->check(CLI::Range(1, 8));
    part->add_option("-p,--parts", parts, "number of parts")->required();
    add_format(part);
    part->callback([&] { rc = run_partition(depth, parts, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
