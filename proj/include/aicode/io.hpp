#ifndef AICODE_IO_HPP
#define AICODE_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aicode/annihilator.hpp"
#include "aicode/boolfun.hpp"
#include "aicode/code.hpp"
#include "aicode/field.hpp"

namespace aicode {

using nlohmann::json;

namespace hex {

inline std::string from_value(std::uint64_t v) {
    if (v == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    while (v) {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return s;
}

inline std::uint64_t to_value(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("hex: empty string");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument(std::string("hex: bad digit '") + c + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

/// Bit vector -> lowercase hex. Bit i of the vector is bit i%8 of byte i/8;
/// bytes are rendered conventionally (high nibble first) in ascending order,
/// so the truth table "f(point i) = bit i" reads back unambiguously.
inline std::string from_bits(const std::vector<std::uint8_t>& bits) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t base = 0; base < bits.size(); base += 8) {
        unsigned byte = 0;
        for (std::size_t j = 0; j < 8 && base + j < bits.size(); ++j)
            byte |= (bits[base + j] & 1u) << j;
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

inline std::vector<std::uint8_t> to_bits(const std::string& s, std::size_t nbits) {
    if (s.size() != 2 * ((nbits + 7) / 8))
        throw std::invalid_argument("hex: bit string has wrong length");
    std::vector<std::uint8_t> bits(nbits, 0);
    for (std::size_t base = 0; base < nbits; base += 8) {
        const std::string byte_hex = s.substr(2 * (base / 8), 2);
        const unsigned hi = static_cast<unsigned>(to_value(std::string(1, byte_hex[0])));
        const unsigned lo = static_cast<unsigned>(to_value(std::string(1, byte_hex[1])));
        const unsigned value = lo | (hi << 4);
        for (std::size_t j = 0; j < 8 && base + j < nbits; ++j)
            bits[base + j] = static_cast<std::uint8_t>((value >> j) & 1);
    }
    return bits;
}

}  // namespace hex

inline json field_to_json(const Gf2n& f) {
    return json{{"n", f.degree_n()},
                {"poly_bits", hex::from_value(f.reduction_poly())},
                {"alpha_bits", hex::from_value(f.alpha())}};
}

/// Only the canonical field per degree is accepted; the reduction polynomial
/// and alpha are fixed by the built-in table so that reports are reproducible.
inline FieldPtr field_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    FieldPtr f = Gf2n::make(n);
    if (j.contains("poly_bits") &&
        hex::to_value(j.at("poly_bits").get<std::string>()) != f->reduction_poly())
        throw std::invalid_argument(
            "field_from_json: reduction polynomial is not the canonical one for n=" +
            std::to_string(n));
    if (j.contains("alpha_bits") &&
        hex::to_value(j.at("alpha_bits").get<std::string>()) != f->alpha())
        throw std::invalid_argument(
            "field_from_json: alpha is not the canonical one for n=" +
            std::to_string(n));
    return f;
}

/// Function file: {"n", "m", "repr": "tt"|"anf"|"uni", "data", "field"}.
/// m = 1 truth tables and ANF vectors are packed hex bit strings with
/// bit i = value at point i; vectorial tables and univariate forms are arrays
/// of lowercase hex values, one per point / coefficient.
inline json function_to_json(const VectorialFunction& F,
                             const std::string& repr = "tt") {
    json j;
    j["n"] = F.n();
    j["m"] = F.m();
    j["repr"] = repr;
    j["field"] = field_to_json(*F.field());
    if (repr == "tt") {
        if (F.m() == 1) {
            std::vector<std::uint8_t> bits(F.table().begin(), F.table().end());
            j["data"] = hex::from_bits(bits);
        } else {
            json arr = json::array();
            for (auto v : F.table()) arr.push_back(hex::from_value(v));
            j["data"] = arr;
        }
    } else if (repr == "anf") {
        json arr = json::array();
        std::vector<std::vector<std::uint8_t>> anfs;
        for (int i = 0; i < F.m(); ++i) anfs.push_back(F.coordinate(i).anf());
        if (F.m() == 1) {
            j["data"] = hex::from_bits(anfs[0]);
        } else {
            for (std::size_t u = 0; u < anfs[0].size(); ++u) {
                std::uint32_t c = 0;
                for (int i = 0; i < F.m(); ++i)
                    c |= static_cast<std::uint32_t>(anfs[i][u]) << i;
                arr.push_back(hex::from_value(c));
            }
            j["data"] = arr;
        }
    } else if (repr == "uni") {
        json arr = json::array();
        for (Fe d : F.uni()) arr.push_back(hex::from_value(d));
        j["data"] = arr;
    } else {
        throw std::invalid_argument("function_to_json: unknown repr " + repr);
    }
    return j;
}

inline VectorialFunction function_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    FieldPtr field = j.contains("field") ? field_from_json(j.at("field"))
                                         : Gf2n::make(n);
    if (field->degree_n() != n)
        throw std::invalid_argument("function_from_json: field/n mismatch");
    const std::string repr = j.at("repr").get<std::string>();
    const std::size_t size = std::size_t{1} << n;
    if (repr == "tt" || repr == "anf") {
        std::vector<std::uint32_t> cells(size, 0);
        if (m == 1 && j.at("data").is_string()) {
            const auto bits = hex::to_bits(j.at("data").get<std::string>(), size);
            for (std::size_t i = 0; i < size; ++i) cells[i] = bits[i];
        } else {
            const auto& arr = j.at("data");
            if (!arr.is_array() || arr.size() != size)
                throw std::invalid_argument("function_from_json: bad data length");
            for (std::size_t i = 0; i < size; ++i)
                cells[i] = static_cast<std::uint32_t>(
                    hex::to_value(arr[i].get<std::string>()));
        }
        if (repr == "tt")
            return VectorialFunction::from_table(field, m, std::move(cells));
        // coordinatewise Moebius from the vectorial ANF
        std::vector<std::uint32_t> table(size, 0);
        for (int i = 0; i < m; ++i) {
            std::vector<std::uint8_t> a(size);
            for (std::size_t u = 0; u < size; ++u)
                a[u] = static_cast<std::uint8_t>((cells[u] >> i) & 1);
            mobius_transform(a);
            for (std::size_t x = 0; x < size; ++x)
                table[x] |= static_cast<std::uint32_t>(a[x]) << i;
        }
        return VectorialFunction::from_table(field, m, std::move(table));
    }
    if (repr == "uni") {
        const auto& arr = j.at("data");
        if (!arr.is_array() || arr.size() != size)
            throw std::invalid_argument("function_from_json: bad uni length");
        std::vector<Fe> uni(size);
        for (std::size_t i = 0; i < size; ++i)
            uni[i] = static_cast<Fe>(hex::to_value(arr[i].get<std::string>()));
        return VectorialFunction::from_uni(field, m, uni);
    }
    throw std::invalid_argument("function_from_json: unknown repr " + repr);
}

inline json annihilator_basis_to_json(const AnnihilatorBasis& b) {
    json arr = json::array();
    for (const auto& g : b.basis) arr.push_back(hex::from_bits(g.anf()));
    return json{{"degree_bound", b.degree_bound},
                {"dimension", b.dimension},
                {"basis", arr}};
}

inline json distance_to_json(const DistanceReport& d,
                             bool include_distribution = false) {
    json j;
    j["method"] = d.method;
    if (d.zero_code()) return j;
    if (d.exact()) {
        j["value"] = d.lower;
    } else {
        j["lower"] = d.lower;
        j["upper"] = d.upper;
    }
    if (include_distribution && !d.distribution.empty()) {
        json dist = json::object();
        for (const auto& [w, c] : d.distribution) dist[std::to_string(w)] = c;
        j["distribution"] = dist;
    }
    return j;
}

inline json code_to_json(const CyclicCode& C, const DistanceReport& dist,
                         const WeightHeightResult& wh, const LcdResult& lcd,
                         bool include_distribution = false) {
    json j;
    j["length"] = C.length();
    j["dimension"] = C.dimension();
    json coeffs = json::array();
    for (Fe c : C.gen().coeffs) coeffs.push_back(hex::from_value(c));
    j["gen_coeffs"] = coeffs;
    j["defining_set"] = C.gen().root_exponents;
    j["lcd"] = lcd.lcd;
    j["min_distance"] = distance_to_json(dist, include_distribution);
    if (wh.zero_code)
        j["min_weight_height"] = nullptr;
    else
        j["min_weight_height"] = wh.value;
    return j;
}

}  // namespace aicode

#endif  // AICODE_IO_HPP
