#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "quasi/certificate.hpp"
#include "quasi/holes.hpp"
#include "quasi/oracle.hpp"
#include "quasi/spectrum.hpp"
#include "quasi/synthesis.hpp"

namespace {

using namespace quasi;

enum Exit { kOk = 0, kInvalid = 1, kImpossible = 2, kInternal = 3 };

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QUASI_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring unparsable QUASI_SEED=" << env << "\n";
        }
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int run_witness(int n, std::int64_t k, std::uint64_t seed, const std::string& out, const std::string& format) {
    WitnessCertificate cert = witness(n, k, seed);
    if (format == "text")
        write_output(out, to_text(cert.square.grid()));
    else
        write_output(out, certificate_json(cert, 2) + "\n");
    if (!out.empty() && out != "-")
        std::cerr << "n=" << n << " k=" << k << " recount=" << cert.k_recounted << " rule=" << cert.trace.rule
                  << " -> " << out << "\n";
    return kOk;
}

int run_witness_all(int max_n, std::uint64_t seed, int jobs, const std::string& out) {
    std::vector<std::pair<int, std::int64_t>> work;
    for (int n = 1; n <= max_n; ++n)
        for (std::int64_t k : admissible(n).members()) work.emplace_back(n, k);
    std::vector<std::string> lines(work.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
            auto [n, k] = work[i];
            try {
                WitnessCertificate cert = witness(n, k, seed);
                if (cert.k_recounted != k) throw std::logic_error("recount mismatch");
                lines[i] = certificate_json(cert);
            } catch (const std::exception& e) {
                failed = true;
                std::lock_guard lock(err_mu);
                std::cerr << "n=" << n << " k=" << k << ": " << e.what() << "\n";
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < std::max(1, jobs); ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (!out.empty()) {
        std::ostringstream ss;
        for (const auto& line : lines)
            if (!line.empty()) ss << line << "\n";
        write_output(out, ss.str());
    }
    std::cout << work.size() << " targets for n <= " << max_n << (failed ? ", with failures" : ", all certified")
              << "\n";
    return failed ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasigroups with a prescribed number of commuting pairs"};
    app.require_subcommand(1);

    int n = 0, max_n = 0, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::int64_t k = 0, limit = 50;
    std::uint64_t seed = default_seed();
    std::string out, format = "json", path, ratio;
    bool all = false, histogram = false, column_major = false;

    auto* wit = app.add_subcommand("witness", "build a certified square with exactly k commuting pairs");
    wit->add_option("--n", n, "order");
    wit->add_option("--k", k, "number of commuting pairs");
    wit->add_option("--seed", seed, "seed (default: $QUASI_SEED or 0)");
    wit->add_option("--out", out, "output file (default: stdout)");
    wit->add_option("--format", format, "json certificate or text square")->check(CLI::IsMember({"json", "text"}));
    wit->add_flag("--all", all, "certify every admissible k for every n <= --max-n");
    wit->add_option("--max-n", max_n, "largest order for --all");
    wit->add_option("--jobs", jobs, "worker threads for --all");

    auto* spec = app.add_subcommand("spectrum", "print the commuting counts realised at order n");
    spec->add_option("n", n, "order")->required();

    auto* kqc = app.add_subcommand("kq", "orders with commuting proportion exactly a/b");
    kqc->add_option("q", ratio, "proportion a/b")->required();
    kqc->add_option("--limit", limit, "list members up to this order");

    auto* cnt = app.add_subcommand("count", "commuting count and proportion of a square file");
    cnt->add_option("file", path, "square in text format")->required();

    auto* ver = app.add_subcommand("verify", "re-check a certificate");
    ver->add_option("certificate", path, "certificate JSON")->required();

    auto* en = app.add_subcommand("enumerate", "enumerate every square of order n <= 5");
    en->add_option("n", n, "order")->required();
    en->add_flag("--histogram", histogram, "print the commuting count histogram as JSON");
    en->add_flag("--column-major", column_major, "fill cells column by column");
    en->add_option("--jobs", jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*wit) {
            if (all) {
                if (max_n < 1) throw std::invalid_argument("--all needs --max-n");
                return run_witness_all(max_n, seed, jobs, out);
            }
            if (n < 1) throw std::invalid_argument("--n must be positive");
            return run_witness(n, k, seed, out, format);
        }
        if (*spec) {
            if (n < 1) throw std::invalid_argument("order must be positive");
            std::cout << "C(" << n << ") = " << spectrum_C(n).describe() << "\n";
            return kOk;
        }
        if (*kqc) {
            RationalQ q = parse_rational(ratio);
            KqSet set = kq(q.a, q.b);
            std::cout << set.describe() << "\n";
            auto list = [](const std::vector<std::int64_t>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                return s + "}";
            };
            std::cout << "S = " << list(set.s_members(limit)) << ", K = " << list(set.members(limit)) << "\n";
            return kOk;
        }
        if (*cnt) {
            Square s(read_text_file(path));
            Fraction p = proportion(s);
            std::cout << "C=" << count_commuting(s) << " P=" << p.str() << "\n";
            return kOk;
        }
        if (*ver) {
            CertificateFile cert = parse_certificate(read_file(path));
            VerifyResult r = verify_certificate(cert);
            if (!r.ok) {
                std::cerr << "certificate invalid: " << r.invariant << ": " << r.detail << "\n";
                return kInvalid;
            }
            std::cout << "ok: n=" << cert.n << " k=" << cert.k_target << "\n";
            return kOk;
        }
        if (*en) {
            CellOrder order = column_major ? CellOrder::ColumnMajor : CellOrder::RowMajor;
            Histogram h = commuting_histogram(n, jobs, order);
            std::uint64_t total = 0;
            for (auto [c, f] : h) total += f;
            if (histogram)
                std::cout << histogram_json(h) << "\n";
            else
                std::cout << total << " Latin squares of order " << n << "\n";
            return kOk;
        }
    } catch (const ImpossibleError& e) {
        std::cerr << e.what() << "\n";
        return kImpossible;
    } catch (const ConstructionError& e) {
        std::cerr << "internal construction failure: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
