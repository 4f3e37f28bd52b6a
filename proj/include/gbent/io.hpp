#pragma once

// Text serialization: function tables, spread files, vectorial stacks,
// bijection files. Field elements print as lowercase hex under the bit
// encoding (bit i = coefficient of X^i).

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gbent/errors.hpp"
#include "gbent/gbfunc.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/space.hpp"
#include "gbent/vectorial.hpp"

namespace gbent {

inline std::string to_hex(uint32_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

inline uint32_t parse_hex(const std::string& s) {
    if (s.empty())
        throw FormatError("empty hex value");
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos, 16);
    } catch (const std::exception&) {
        throw FormatError("bad hex value '" + s + "'");
    }
    if (pos != s.size() || v > 0xffffffffUL)
        throw FormatError("bad hex value '" + s + "'");
    return static_cast<uint32_t>(v);
}

namespace detail {

inline std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        const size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw FormatError("bad header token '" + token + "'");
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return kv;
}

inline unsigned header_uint(const std::map<std::string, std::string>& kv,
                            const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw FormatError("missing header field '" + key + "'");
    try {
        return static_cast<unsigned>(std::stoul(it->second));
    } catch (const std::exception&) {
        throw FormatError("bad value for header field '" + key + "'");
    }
}

inline std::string next_content_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        const size_t end = line.find_last_not_of(" \t\r");
        return line.substr(start, end - start + 1);
    }
    throw FormatError("unexpected end of input");
}

inline InnerForm form_from_header(const std::map<std::string, std::string>& kv, unsigned n) {
    const auto it = kv.find("form");
    const std::string mode = it == kv.end() ? "dot" : it->second;
    if (mode == "dot")
        return InnerForm::dot(n);
    if (mode == "trace") {
        if (n % 2)
            throw FormatError("trace form requires even n");
        const auto mod = kv.find("modulus");
        return InnerForm::trace(mod == kv.end() ? FieldCtx(n / 2)
                                                : FieldCtx(n / 2, parse_hex(mod->second)));
    }
    throw FormatError("unknown form '" + mode + "'");
}

inline void write_form_fields(std::ostream& os, const InnerForm& form) {
    if (form.kind() == InnerForm::Kind::Dot) {
        os << " form=dot";
    } else {
        os << " form=trace";
        if (form.field().modulus() != default_modulus(form.field().m()))
            os << " modulus=" << to_hex(form.field().modulus());
    }
}

} // namespace detail

// --- function table files -------------------------------------------------
// header: n=<n> t=<t> form=<dot|trace> [modulus=<hex>]
// then 2^n residues, one per line, in point-index order.

inline void write_function(std::ostream& os, const GBFunc& f) {
    os << "n=" << f.n() << " t=" << f.t();
    detail::write_form_fields(os, f.form());
    os << "\n";
    for (uint8_t v : f.table())
        os << unsigned{v} << "\n";
}

inline GBFunc read_function(std::istream& is) {
    const auto kv = detail::parse_header(detail::next_content_line(is));
    const unsigned n = detail::header_uint(kv, "n");
    const unsigned t = detail::header_uint(kv, "t");
    if (n < 1 || n > kMaxDimension)
        throw FormatError("n out of range");
    const InnerForm form = detail::form_from_header(kv, n);

    std::vector<uint8_t> table;
    table.reserve(size_t{1} << n);
    for (size_t i = 0; i < size_t{1} << n; ++i) {
        const std::string line = detail::next_content_line(is);
        unsigned long v = 0;
        try {
            v = std::stoul(line);
        } catch (const std::exception&) {
            throw FormatError("bad table entry '" + line + "'");
        }
        if (v >> t)
            throw FormatError("table entry " + std::to_string(v) + " out of range for t=" +
                              std::to_string(t));
        table.push_back(static_cast<uint8_t>(v));
    }
    return GBFunc(t, form, std::move(table));
}

// --- spread files -----------------------------------------------------------
// header: n=<n>; then one subspace per line, basis points as comma-separated
// hex integers. Loading verifies the partial-spread property.

inline void write_spread(std::ostream& os, const PartialSpread& s) {
    os << "n=" << s.n << "\n";
    for (const Subspace& u : s.members) {
        for (size_t i = 0; i < u.basis().size(); ++i)
            os << (i ? "," : "") << to_hex(u.basis()[i]);
        os << "\n";
    }
}

inline PartialSpread read_spread(std::istream& is) {
    const auto kv = detail::parse_header(detail::next_content_line(is));
    const unsigned n = detail::header_uint(kv, "n");
    if (n < 2 || n > kMaxDimension || n % 2)
        throw FormatError("spread dimension must be even and in [2, 24]");

    PartialSpread spread;
    spread.n = n;
    std::string line;
    while (is.good()) {
        try {
            line = detail::next_content_line(is);
        } catch (const FormatError&) {
            break; // end of input
        }
        std::vector<Point> basis;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            basis.push_back(parse_hex(tok));
        spread.members.push_back(Subspace::from_basis(n, basis));
    }
    if (!verify_partial_spread(spread))
        throw FormatError("members do not form a partial spread");
    return spread;
}

// --- vectorial function files ------------------------------------------------
// header: n=<n> t=<t> m=<m> form=<dot|trace>; then the m component tables
// stacked, 2^n residues each.

inline void write_vectorial(std::ostream& os, const VecGBFunc& f) {
    os << "n=" << f.n() << " t=" << f.t() << " m=" << f.m();
    detail::write_form_fields(os, f.form());
    os << "\n";
    for (const GBFunc& comp : f.components())
        for (uint8_t v : comp.table())
            os << unsigned{v} << "\n";
}

inline VecGBFunc read_vectorial(std::istream& is) {
    const auto kv = detail::parse_header(detail::next_content_line(is));
    const unsigned n = detail::header_uint(kv, "n");
    const unsigned t = detail::header_uint(kv, "t");
    const unsigned m = detail::header_uint(kv, "m");
    if (n < 1 || n > kMaxDimension)
        throw FormatError("n out of range");
    const InnerForm form = detail::form_from_header(kv, n);

    std::vector<GBFunc> components;
    components.reserve(m);
    for (unsigned j = 0; j < m; ++j) {
        std::vector<uint8_t> table;
        table.reserve(size_t{1} << n);
        for (size_t i = 0; i < size_t{1} << n; ++i) {
            const std::string line = detail::next_content_line(is);
            unsigned long v = 0;
            try {
                v = std::stoul(line);
            } catch (const std::exception&) {
                throw FormatError("bad table entry '" + line + "'");
            }
            if (v >> t)
                throw FormatError("table entry out of range");
            table.push_back(static_cast<uint8_t>(v));
        }
        components.emplace_back(t, form, std::move(table));
    }
    return VecGBFunc(std::move(components));
}

// --- bijection files ----------------------------------------------------------
// 2^(n/2) lines "s -> (a_1,...,a_m)", s running from 1.

inline void write_bijection(std::ostream& os, const std::vector<ZqVec>& phi) {
    for (size_t s = 0; s < phi.size(); ++s) {
        os << (s + 1) << " -> (";
        for (size_t j = 0; j < phi[s].size(); ++j)
            os << (j ? "," : "") << unsigned{phi[s][j]};
        os << ")\n";
    }
}

inline std::vector<ZqVec> read_bijection(std::istream& is, size_t count, unsigned m) {
    std::vector<ZqVec> phi(count);
    std::vector<bool> filled(count, false);
    for (size_t i = 0; i < count; ++i) {
        const std::string line = detail::next_content_line(is);
        const size_t arrow = line.find("->");
        const size_t open = line.find('(');
        const size_t close = line.find(')');
        if (arrow == std::string::npos || open == std::string::npos ||
            close == std::string::npos || close < open)
            throw FormatError("bad bijection line '" + line + "'");
        unsigned long s = 0;
        try {
            s = std::stoul(line.substr(0, arrow));
        } catch (const std::exception&) {
            throw FormatError("bad bijection index in '" + line + "'");
        }
        if (s < 1 || s > count)
            throw FormatError("bijection index " + std::to_string(s) + " out of range");
        if (filled[s - 1])
            throw FormatError("bijection index " + std::to_string(s) + " repeated");

        ZqVec v;
        std::istringstream vs(line.substr(open + 1, close - open - 1));
        std::string tok;
        while (std::getline(vs, tok, ',')) {
            try {
                v.push_back(static_cast<uint8_t>(std::stoul(tok)));
            } catch (const std::exception&) {
                throw FormatError("bad bijection coordinate '" + tok + "'");
            }
        }
        if (v.size() != m)
            throw FormatError("bijection value must have m = " + std::to_string(m) +
                              " coordinates");
        phi[s - 1] = std::move(v);
        filled[s - 1] = true;
    }
    return phi;
}

// --- spectra -------------------------------------------------------------------
// one line per u: comma-separated signed coordinates on {1, zeta, ...}.

inline void write_spectrum(std::ostream& os, const Spectrum& spec) {
    os << "n=" << spec.n << " t=" << spec.t << "\n";
    for (const CycInt& v : spec.values) {
        for (size_t k = 0; k < v.degree(); ++k)
            os << (k ? "," : "") << v[k];
        os << "\n";
    }
}

} // namespace gbent
