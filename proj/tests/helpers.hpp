#ifndef COVMAT_TESTS_HELPERS_HPP_
#define COVMAT_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covmat/covering.hpp"
#include "covmat/random_covering.hpp"

namespace covmat::tests {

// The running example: U = {a..f}, blocks {a,b}, {a,c,d}, {a,b,c,d}, {d,e,f}.
// Neighborhoods, hand-intersected from the blocks:
//   N(a)={a}  N(b)={a,b}  N(c)={a,c,d}  N(d)={d}  N(e)=N(f)={d,e,f}
inline Covering example_covering() {
    auto u = Universe::make({"a", "b", "c", "d", "e", "f"});
    return build_covering(
        u, {{"a", "b"}, {"a", "c", "d"}, {"a", "b", "c", "d"}, {"d", "e", "f"}});
}

inline ElementSet set_of(const Covering& cov, const std::vector<std::string>& names) {
    return ElementSet::of(cov.universe(), names);
}

// ---------------------------------------------------------------------------
// Independent reference for the Boolean products: plain int matrices and
// triple loops, no word packing, kept apart from the implementation path.
// ---------------------------------------------------------------------------

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int(const BoolMatrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
    return out;
}

inline BoolMatrix from_int(const IntMatrix& m) {
    BoolMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out.set(i, j, m[i][j] != 0);
    return out;
}

inline IntMatrix naive_bool_product(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    IntMatrix c(n, std::vector<int>(q, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < p; ++k)
                if (a[i][k] == 1 && b[k][j] == 1) {
                    c[i][j] = 1;
                    break;
                }
    return c;
}

// Predicate reading: entry is 1 iff a[i][k] <= b[k][j] for every k.
inline IntMatrix naive_impl_predicate(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    IntMatrix c(n, std::vector<int>(q, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < p; ++k)
                if (a[i][k] > b[k][j]) {
                    c[i][j] = 0;
                    break;
                }
    return c;
}

// Integer reading: min over k of (b[k][j] - a[i][k] + 1), clamped to {0,1}.
// The raw minimum can reach 2 when row i of a is all zeros against ones.
inline IntMatrix naive_impl_clamped(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    IntMatrix c(n, std::vector<int>(q, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            int value = 2;
            for (std::size_t k = 0; k < p; ++k)
                value = std::min(value, b[k][j] - a[i][k] + 1);
            c[i][j] = std::min(value, 1);
        }
    return c;
}

inline BoolMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                int percent_ones = 50) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, static_cast<int>(rng() % 100) < percent_ones);
    return m;
}

inline BoolVector random_vector(std::size_t length, std::mt19937_64& rng) {
    BoolVector v(length);
    for (std::size_t i = 0; i < length; ++i) v.set(i, rng() & 1u);
    return v;
}

inline ElementSet subset_from_mask(const UniversePtr& u, std::uint64_t mask) {
    ElementSet x(u);
    for (std::size_t i = 0; i < u->size(); ++i)
        if ((mask >> i) & 1u) x.add_index(i);
    return x;
}

// ---------------------------------------------------------------------------
// CLI process runner (golden tests spawn the real binary).
// ---------------------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args) {
    static int counter = 0;
    const std::string base = "/tmp/covmat_test_" + std::to_string(::getpid()) + "_" +
                             std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";

    std::string command = shell_quote(binary);
    for (const auto& arg : args) command += " " + shell_quote(arg);
    command += " > " + shell_quote(out_path) + " 2> " + shell_quote(err_path);

    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace covmat::tests

#endif  // COVMAT_TESTS_HELPERS_HPP_
