#include "frftlab/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace frftlab {

void write_signal_csv(std::ostream& os, const Signal& f) {
    os << "t,re,im\n";
    char buf[128];
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.15g,%.15g,%.15g\n", f.grid.point(i),
                      f.samples[i].real(), f.samples[i].imag());
        os << buf;
    }
}

void write_signal_csv(const std::string& path, const Signal& f) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_signal_csv(os, f);
    if (!os) throw IoError("write failed: " + path);
}

Signal read_signal_csv(std::istream& is, const std::string& name) {
    std::string line;
    if (!std::getline(is, line)) throw IoError(name + ": empty signal file");
    // tolerate whitespace and an optional BOM in the header
    if (line.find("t,re,im") == std::string::npos)
        throw IoError(name + ": expected header 't,re,im'");

    std::vector<double> t;
    std::vector<cplx> v;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        double a, b, c;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
            throw IoError(name + ": bad row at line " + std::to_string(lineno));
        t.push_back(a);
        v.emplace_back(b, c);
    }
    if (t.empty()) throw IoError(name + ": no data rows");
    if (t.size() == 1) return Signal(UniformGrid(t[0], 1.0, 1), std::move(v));

    const double step = t[1] - t[0];
    if (!(step > 0.0)) throw IoError(name + ": non-increasing abscissae");
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double d = t[i] - t[i - 1];
        if (std::abs(d - step) > 1e-9 * std::max(std::abs(step), 1e-300))
            throw IoError(name + ": non-uniform spacing at line " + std::to_string(i + 2));
    }
    return Signal(UniformGrid(t[0], step, t.size()), std::move(v));
}

Signal read_signal_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    return read_signal_csv(is, path);
}

}  // namespace frftlab
