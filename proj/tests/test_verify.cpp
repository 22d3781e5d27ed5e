#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rookpoly/verify.hpp"

using namespace rookpoly;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/rookpoly_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("single cell record") {
    VerifySummary summary = test_conjecture(ShapeKind::polyomino, 1);
    REQUIRE(summary.records.size() == 1);
    const VerificationRecord& rec = summary.records[0];
    CHECK(rec.switching_polynomial == IntPolynomial{1, 1});
    CHECK(rec.h_poly == IntPolynomial{1, 1});
    CHECK(rec.rook_number == 1);
    CHECK(rec.deg_h == 1);
    CHECK(rec.simple);
    CHECK(rec.sharp);
    CHECK(rec.match_poly);
    CHECK(rec.match_reg);
    CHECK(summary.ok());
}

TEST_CASE("rank four shapes all match") {
    const VerifySummary poly = test_conjecture(ShapeKind::polyomino, 4);
    CHECK(poly.records.size() == 5);
    CHECK(poly.counterexamples.empty());
    CHECK(poly.engine_mismatches.empty());
    CHECK(poly.matches == 5);

    const VerifySummary coll = test_conjecture(ShapeKind::collection, 4);
    CHECK(coll.records.size() == 22);
    CHECK(coll.counterexamples.empty());
    CHECK(coll.matches == 22);
}

TEST_CASE("record sets do not depend on the job count") {
    VerifyOptions serial;
    serial.jobs = 1;
    VerifyOptions parallel;
    parallel.jobs = 4;
    const VerifySummary a = test_conjecture(ShapeKind::collection, 4, serial);
    const VerifySummary b = test_conjecture(ShapeKind::collection, 4, parallel);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k)
        CHECK(a.records[k].tsv().substr(0, a.records[k].tsv().rfind('\t')) ==
              b.records[k].tsv().substr(0, b.records[k].tsv().rfind('\t')));
}

TEST_CASE("dataset round trip is byte-identical") {
    TempFile file("dataset.txt");
    const auto shapes = enumerate_shapes(ShapeKind::polyomino, 4);
    write_dataset(shapes, file.path);
    std::ifstream in(file.path);
    std::stringstream first;
    first << in.rdbuf();

    const auto reread = read_dataset(file.path);
    CHECK(reread == shapes);
    write_dataset(reread, file.path);
    std::ifstream in2(file.path);
    std::stringstream second;
    second << in2.rdbuf();
    CHECK(first.str() == second.str());
}

TEST_CASE("dataset errors carry the line number") {
    TempFile file("broken.txt");
    {
        std::ofstream out(file.path);
        out << "{{{1,1},{2,2}}}\n";
        out << "{{{1,1},{9,9}}}\n";
    }
    try {
        read_dataset(file.path);
        FAIL("expected a parse failure");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK_THROWS_AS(read_dataset("/nonexistent/path"), std::runtime_error);
}

TEST_CASE("empty dataset yields an empty stream") {
    TempFile file("empty.txt");
    std::ofstream(file.path).close();
    CHECK(read_dataset(file.path).empty());
}

TEST_CASE("verification accepts a dataset source") {
    TempFile file("source.txt");
    write_dataset(enumerate_shapes(ShapeKind::polyomino, 3), file.path);
    VerifyOptions options;
    options.dataset_path = file.path;
    const VerifySummary summary = test_conjecture(ShapeKind::polyomino, 3, options);
    CHECK(summary.records.size() == 2);
    CHECK(summary.ok());
}

TEST_CASE("checkpoint resume skips completed work") {
    TempFile cp("checkpoint.json");
    VerifyOptions options;
    options.checkpoint_path = cp.path;
    const VerifySummary first = test_conjecture(ShapeKind::collection, 3, options);
    CHECK(first.ok());
    // Resume from the completed checkpoint: all records must be reloaded.
    const VerifySummary second = test_conjecture(ShapeKind::collection, 3, options);
    REQUIRE(second.records.size() == first.records.size());
    for (std::size_t k = 0; k < first.records.size(); ++k)
        CHECK(first.records[k].tsv() == second.records[k].tsv());

    // A mismatched rank is rejected.
    CHECK_THROWS_AS(test_conjecture(ShapeKind::collection, 4, options), std::runtime_error);
}

TEST_CASE("multi-component shapes factor over their components") {
    TempFile file("multi.txt");
    {
        std::ofstream out(file.path);
        out << "{{{1,1},{2,2}},{{4,4},{5,5}}}\n";                    // two far-apart cells
        out << "{{{1,1},{2,2}},{{2,1},{3,2}},{{5,1},{6,2}}}\n";      // a domino and a cell
    }
    VerifyOptions options;
    options.dataset_path = file.path;
    const VerifySummary summary = test_conjecture(ShapeKind::collection, 0, options);
    REQUIRE(summary.records.size() == 2);
    CHECK(summary.ok());
    // Records are sorted by canonical form: the domino-plus-cell shape first.
    CHECK(summary.records[0].h_poly == IntPolynomial{1, 3, 2});
    CHECK(summary.records[1].h_poly == IntPolynomial{1, 2, 1});
}

TEST_CASE("a zero budget marks every shape as timed out") {
    VerifyOptions options;
    options.per_shape_timeout = std::chrono::milliseconds(0);
    const VerifySummary summary = test_conjecture(ShapeKind::collection, 4, options);
    CHECK(summary.records.empty());
    CHECK(summary.timeouts.size() == 22);
    CHECK_FALSE(summary.ok());
    CHECK(render_report(summary).find("TIMEOUTS 22") != std::string::npos);
}

TEST_CASE("report rendering") {
    const VerifySummary summary = test_conjecture(ShapeKind::polyomino, 2);
    const std::string report = render_report(summary);
    CHECK(report.find("OK 1") != std::string::npos);
    CHECK(report.find("polyomino") != std::string::npos);

    VerifySummary failing;
    failing.counterexamples = {"{{{1,1},{2,2}}}"};
    CHECK(render_report(failing).find("COUNTEREXAMPLES 1") != std::string::npos);
}

TEST_CASE("record line has the documented field order") {
    const VerifySummary summary = test_conjecture(ShapeKind::polyomino, 1);
    std::istringstream line(summary.records[0].tsv());
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(line, field, '\t')) fields.push_back(field);
    REQUIRE(fields.size() == 13);
    CHECK(fields[0] == "{{{1,1},{2,2}}}");
    CHECK(fields[1] == "1");
    CHECK(fields[2] == "polyomino");
    CHECK(fields[3] == "1,1");
    CHECK(fields[4] == "1,1");
    CHECK(fields[5] == "1");
    CHECK(fields[6] == "1");
    for (int k = 7; k <= 11; ++k) CHECK(fields[k] == "1");
}

TEST_SUITE_END();
