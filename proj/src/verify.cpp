#include "rookpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rookpoly/convex.hpp"
#include "rookpoly/deadline.hpp"
#include "rookpoly/hilbert.hpp"
#include "rookpoly/switching.hpp"

namespace rookpoly {

std::string VerificationRecord::tsv() const {
    std::ostringstream out;
    out << canonical_key << '\t' << rank << '\t' << to_string(kind) << '\t'
        << switching_polynomial.csv() << '\t' << h_poly.csv() << '\t' << rook_number << '\t'
        << deg_h << '\t' << int(simple) << '\t' << int(sharp) << '\t' << int(sharp_prime) << '\t'
        << int(match_poly) << '\t' << int(match_reg) << '\t' << elapsed_ms;
    return out.str();
}

VerificationRecord verify_shape(const CellCollection& p, ShapeKind kind, bool cross_check,
                                std::vector<std::string>* mismatch_sink) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.canonical_key = canonical_key(p);
    rec.rank = p.rank();
    rec.kind = kind;

    SwitchReport sw = switching_rook_number_report(p);
    rec.switching_polynomial = sw.switching_polynomial;
    rec.rook_number = sw.rook_number;

    SeriesResult hs = h_polynomial(p);
    rec.h_poly = hs.h_poly;
    rec.deg_h = hs.h_poly.degree();

    rec.simple = is_simple(p);
    rec.sharp = satisfies_sharp(p);
    rec.sharp_prime = satisfies_sharp_prime(p);
    rec.match_poly = rec.switching_polynomial == rec.h_poly;
    rec.match_reg = rec.rook_number == rec.deg_h;

    if (cross_check) {
        auto report_mismatch = [&](const std::string& what) {
            if (mismatch_sink) mismatch_sink->push_back(rec.canonical_key + ": " + what);
        };
        std::vector<CellCollection> comps = weak_components(p);
        bool all_convex = true;
        for (const CellCollection& c : comps)
            if (!is_convex(c).convex) all_convex = false;
        if (all_convex && !p.empty()) {
            RecursiveH rh = recursive_h(p);
            if (rh.certified && rh.h != rec.h_poly)
                report_mismatch("recursion h differs from series h");
        }
        if (comps.size() > 1) {
            IntPolynomial h_prod = IntPolynomial::one();
            IntPolynomial r_prod = IntPolynomial::one();
            for (const CellCollection& c : comps) {
                h_prod = h_prod * h_polynomial(c).h_poly;
                r_prod = r_prod * switching_rook_polynomial(c);
            }
            if (h_prod != rec.h_poly)
                report_mismatch("h does not factor over weak components");
            if (r_prod != rec.switching_polynomial)
                report_mismatch("switching polynomial does not factor over weak components");
        }
    }

    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rec;
}

namespace {

struct Checkpoint {
    // A slot's record is published before its status flips away from pending,
    // so a reader that acquires the status may read the record.
    std::vector<std::atomic<int>> status;
    std::vector<VerificationRecord> records;

    static constexpr int kPending = 0, kDone = 1, kTimeout = 2;

    explicit Checkpoint(std::size_t n) : status(n), records(n) {}
};

void save_checkpoint(const std::string& path, ShapeKind kind, int rank, const Checkpoint& cp) {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["rank"] = rank;
    j["total"] = cp.status.size();
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t i = 0; i < cp.status.size(); ++i) {
        const int status = cp.status[i].load(std::memory_order_acquire);
        if (status == Checkpoint::kPending) continue;
        nlohmann::json item;
        item["index"] = i;
        item["status"] = status;
        if (status == Checkpoint::kDone) item["record"] = cp.records[i].tsv();
        items.push_back(std::move(item));
    }
    j["items"] = std::move(items);
    std::ofstream out(path + ".tmp", std::ios::trunc);
    out << j.dump();
    out.close();
    std::rename((path + ".tmp").c_str(), path.c_str());
}

VerificationRecord record_from_tsv(const std::string& line) {
    std::istringstream in(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(in, field, '\t')) fields.push_back(field);
    if (fields.size() != 13) throw std::runtime_error("checkpoint: malformed record line");
    auto parse_poly = [](const std::string& csv) {
        std::vector<BigInt> coeffs;
        std::istringstream s(csv);
        std::string item;
        while (std::getline(s, item, ',')) coeffs.emplace_back(item);
        return IntPolynomial(std::move(coeffs));
    };
    VerificationRecord rec;
    rec.canonical_key = fields[0];
    rec.rank = std::stoi(fields[1]);
    rec.kind = parse_shape_kind(fields[2]);
    rec.switching_polynomial = parse_poly(fields[3]);
    rec.h_poly = parse_poly(fields[4]);
    rec.rook_number = std::stoi(fields[5]);
    rec.deg_h = std::stoi(fields[6]);
    rec.simple = fields[7] == "1";
    rec.sharp = fields[8] == "1";
    rec.sharp_prime = fields[9] == "1";
    rec.match_poly = fields[10] == "1";
    rec.match_reg = fields[11] == "1";
    rec.elapsed_ms = std::stoll(fields[12]);
    return rec;
}

void load_checkpoint(const std::string& path, ShapeKind kind, int rank, Checkpoint& cp) {
    std::ifstream in(path);
    if (!in) return;  // nothing to resume
    nlohmann::json j;
    in >> j;
    if (j.at("kind").get<std::string>() != to_string(kind) || j.at("rank").get<int>() != rank ||
        j.at("total").get<std::size_t>() != cp.status.size())
        throw std::runtime_error("checkpoint: file does not match this kind/rank");
    for (const auto& item : j.at("items")) {
        std::size_t index = item.at("index").get<std::size_t>();
        int status = item.at("status").get<int>();
        if (index >= cp.status.size()) throw std::runtime_error("checkpoint: bad index");
        if (status == Checkpoint::kDone)
            cp.records[index] = record_from_tsv(item.at("record").get<std::string>());
        cp.status[index].store(status, std::memory_order_relaxed);
    }
}

}  // namespace

VerifySummary test_conjecture(ShapeKind kind, int rank, const VerifyOptions& options) {
    if (rank < 0) throw std::invalid_argument("test_conjecture: negative rank");
    std::vector<CellCollection> shapes;
    if (!options.dataset_path.empty()) {
        for (CellCollection& p : read_dataset(options.dataset_path))
            shapes.push_back(canonical(p));
        std::sort(shapes.begin(), shapes.end());
        shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    } else {
        shapes = enumerate_shapes(kind, rank);
    }

    Checkpoint cp(shapes.size());
    if (!options.checkpoint_path.empty())
        load_checkpoint(options.checkpoint_path, kind, rank, cp);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> completed{0};
    std::mutex sink_mutex;
    std::vector<std::string> mismatches;
    const int jobs = std::max(1, options.jobs);

    auto worker = [&]() {
        std::vector<std::string> local_mismatches;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= shapes.size()) break;
            if (cp.status[i].load(std::memory_order_relaxed) != Checkpoint::kPending) continue;
            try {
                detail::DeadlineScope deadline(options.per_shape_timeout);
                cp.records[i] =
                    verify_shape(shapes[i], kind, options.cross_check, &local_mismatches);
                cp.status[i].store(Checkpoint::kDone, std::memory_order_release);
            } catch (const detail::ComputeTimeout&) {
                cp.status[i].store(Checkpoint::kTimeout, std::memory_order_release);
            }
            const std::size_t done = completed.fetch_add(1) + 1;
            if (!options.checkpoint_path.empty() && done % 64 == 0) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                save_checkpoint(options.checkpoint_path, kind, rank, cp);
            }
        }
        if (!local_mismatches.empty()) {
            std::lock_guard<std::mutex> lock(sink_mutex);
            mismatches.insert(mismatches.end(), local_mismatches.begin(), local_mismatches.end());
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (!options.checkpoint_path.empty()) save_checkpoint(options.checkpoint_path, kind, rank, cp);

    VerifySummary summary;
    std::sort(mismatches.begin(), mismatches.end());
    summary.engine_mismatches = std::move(mismatches);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (cp.status[i].load(std::memory_order_acquire) == Checkpoint::kTimeout) {
            summary.timeouts.push_back(canonical_key(shapes[i]));
            continue;
        }
        const VerificationRecord& rec = cp.records[i];
        if (rec.match_poly && rec.match_reg)
            ++summary.matches;
        else
            summary.counterexamples.push_back(rec.canonical_key);
        summary.records.push_back(rec);
    }
    return summary;
}

void write_dataset(const std::vector<CellCollection>& shapes, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("write_dataset: cannot open " + path);
    for (const CellCollection& p : shapes) out << format_collection(p) << '\n';
    if (!out) throw std::runtime_error("write_dataset: write failed for " + path);
}

std::vector<CellCollection> read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_dataset: cannot open " + path);
    std::vector<CellCollection> shapes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            shapes.push_back(parse_collection(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return shapes;
}

std::string render_report(const VerifySummary& summary) {
    std::ostringstream out;
    for (const VerificationRecord& rec : summary.records) out << rec.tsv() << '\n';
    for (const std::string& key : summary.timeouts) out << "TIMEOUT\t" << key << '\n';
    for (const std::string& line : summary.engine_mismatches)
        out << "ENGINE-MISMATCH\t" << line << '\n';
    if (!summary.counterexamples.empty())
        out << "COUNTEREXAMPLES " << summary.counterexamples.size() << '\n';
    else if (!summary.timeouts.empty())
        out << "TIMEOUTS " << summary.timeouts.size() << '\n';
    else
        out << "OK " << summary.matches << '\n';
    return out.str();
}

}  // namespace rookpoly
