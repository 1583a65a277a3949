// Copyright 2026 the orthopair authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orthopair/serialize.hpp"

namespace orthopair {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) {
        fail(std::string(what) + " must be an array");
    }
    return j;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
    array(j, "matrix");
    if (static_cast<Eigen::Index>(j.size()) != rows) {
        fail("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    }
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = array(j[static_cast<std::size_t>(r)], "matrix row");
        if (static_cast<Eigen::Index>(row.size()) != cols) {
            fail("matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) {
            throw;
        }
        fail(e.what());
    } catch (const nlohmann::json::exception& e) {
        fail(e.what());
    }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const AlgebraDescriptor& d) { return Json(d.block_sizes()); }

Json to_json(const AlgebraElement& a) {
    Json blocks = Json::array();
    for (const Matrix& m : a.blocks()) {
        blocks.push_back(matrix_to_json(m));
    }
    Json out = Json::object();
    out["blocks"] = std::move(blocks);
    return out;
}

Json to_json(const CentralElement& gamma) {
    Json out = Json::array();
    for (Complex z : gamma.scalars()) {
        out.push_back(to_json(z));
    }
    return out;
}

Json to_json(const ModuleSpace& space) {
    Json out = Json::object();
    out["blocks"] = to_json(space.algebra);
    out["rank"] = space.rank;
    return out;
}

Json to_json(const ModuleElement& x) {
    Json entries = Json::array();
    for (const AlgebraElement& a : x.entries()) {
        entries.push_back(to_json(a));
    }
    Json out = Json::object();
    out["entries"] = std::move(entries);
    return out;
}

Json to_json(const ModuleOperator& t) {
    Json rows = Json::array();
    for (int i = 0; i < t.domain().rank; ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.codomain().rank; ++j) {
            row.push_back(to_json(t.coeff(i, j)));
        }
        rows.push_back(std::move(row));
    }
    Json out = Json::object();
    out["coeffs"] = std::move(rows);
    return out;
}

Json to_json(const GeneralLinearMap& l) {
    Json out = Json::object();
    out["domain"] = to_json(l.domain());
    out["codomain"] = to_json(l.codomain());
    out["matrix"] = matrix_to_json(l.matrix());
    return out;
}

Json to_json(const Witness& w) {
    Json out = Json::object();
    out["x"] = to_json(w.x);
    out["y"] = to_json(w.y);
    out["inner_norm"] = w.inner_norm;
    out["image_inner_norm"] = w.image_inner_norm;
    out["ratio"] = w.ratio;
    return out;
}

Json to_json(const CharacterizationResult& c) {
    Json out = Json::object();
    out["gamma"] = to_json(c.gamma);
    out["residual"] = c.residual;
    out["tolerance"] = c.tolerance;
    out["spread"] = c.spread;
    Json samples = Json::array();
    for (const ProjectionGamma& p : c.per_projection) {
        Json s = Json::object();
        s["block"] = p.block;
        s["projection"] = p.projection;
        s["gamma"] = to_json(p.gamma);
        samples.push_back(std::move(s));
    }
    out["per_projection"] = std::move(samples);
    if (c.least_squares) {
        out["least_squares"] = to_json(*c.least_squares);
    }
    return out;
}

Json to_json(const Verdict& v) {
    Json out = Json::object();
    out["verdict"] = std::string(verdict_name(v.kind));
    if (v.characterization) {
        out["gamma"] = to_json(v.characterization->gamma);
        out["residual"] = v.characterization->residual;
        out["characterization"] = to_json(*v.characterization);
    }
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
    }
    if (!v.detail.empty()) {
        out["detail"] = v.detail;
    }
    return out;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail("complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

AlgebraDescriptor descriptor_from_json(const Json& j) {
    return guarded([&] {
        array(j, "blocks");
        std::vector<int> sizes;
        for (const Json& k : j) {
            if (!k.is_number_integer()) {
                fail("block sizes must be integers");
            }
            sizes.push_back(k.get<int>());
        }
        return AlgebraDescriptor(std::move(sizes));
    });
}

AlgebraElement algebra_element_from_json(const Json& j, const AlgebraDescriptor& d) {
    return guarded([&] {
        const Json& blocks = array(field(j, "blocks"), "blocks");
        if (blocks.size() != d.block_count()) {
            fail("element has " + std::to_string(blocks.size()) + " blocks, expected " +
                 std::to_string(d.block_count()));
        }
        std::vector<Matrix> mats;
        for (std::size_t b = 0; b < d.block_count(); ++b) {
            mats.push_back(matrix_from_json(blocks[b], d.block_size(b), d.block_size(b)));
        }
        return AlgebraElement(d, std::move(mats));
    });
}

CentralElement central_from_json(const Json& j, const AlgebraDescriptor& d) {
    return guarded([&] {
        array(j, "gamma");
        if (j.size() != d.block_count()) {
            fail("gamma has " + std::to_string(j.size()) + " scalars, expected " + std::to_string(d.block_count()));
        }
        std::vector<Complex> scalars;
        for (const Json& z : j) {
            scalars.push_back(complex_from_json(z));
        }
        return CentralElement(d, std::move(scalars));
    });
}

ModuleSpace space_from_json(const Json& j) {
    return guarded([&] {
        const Json& rank = field(j, "rank");
        if (!rank.is_number_integer()) {
            fail("rank must be an integer");
        }
        return ModuleSpace(descriptor_from_json(field(j, "blocks")), rank.get<int>());
    });
}

ModuleElement module_element_from_json(const Json& j, const ModuleSpace& space) {
    return guarded([&] {
        const Json& entries = array(field(j, "entries"), "entries");
        if (static_cast<int>(entries.size()) != space.rank) {
            fail("module element has " + std::to_string(entries.size()) + " entries, expected " +
                 std::to_string(space.rank));
        }
        std::vector<AlgebraElement> out;
        for (const Json& e : entries) {
            out.push_back(algebra_element_from_json(e, space.algebra));
        }
        return ModuleElement(space, std::move(out));
    });
}

ModuleOperator operator_from_json(const Json& j, const ModuleSpace& domain, const ModuleSpace& codomain) {
    return guarded([&] {
        require_same_algebra(domain.algebra, codomain.algebra);
        const Json& rows = array(field(j, "coeffs"), "coeffs");
        if (static_cast<int>(rows.size()) != domain.rank) {
            fail("operator has " + std::to_string(rows.size()) + " coefficient rows, expected " +
                 std::to_string(domain.rank));
        }
        std::vector<AlgebraElement> coeffs;
        for (const Json& row : rows) {
            array(row, "coefficient row");
            if (static_cast<int>(row.size()) != codomain.rank) {
                fail("coefficient row has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(codomain.rank));
            }
            for (const Json& c : row) {
                coeffs.push_back(algebra_element_from_json(c, domain.algebra));
            }
        }
        return ModuleOperator(domain, codomain, std::move(coeffs));
    });
}

GeneralLinearMap linear_map_from_json(const Json& j) {
    return guarded([&] {
        const ModuleSpace domain = space_from_json(field(j, "domain"));
        const ModuleSpace codomain = space_from_json(field(j, "codomain"));
        const auto rows = static_cast<Eigen::Index>(codomain.dimension());
        const auto cols = static_cast<Eigen::Index>(domain.dimension());
        return GeneralLinearMap(domain, codomain, matrix_from_json(field(j, "matrix"), rows, cols));
    });
}

Witness witness_from_json(const Json& j, const ModuleSpace& space) {
    return guarded([&] {
        Witness w;
        w.x = module_element_from_json(field(j, "x"), space);
        w.y = module_element_from_json(field(j, "y"), space);
        auto number = [&](const char* key) {
            return j.contains(key) && j.at(key).is_number() ? j.at(key).get<double>() : 0.0;
        };
        w.inner_norm = number("inner_norm");
        w.image_inner_norm = number("image_inner_norm");
        w.ratio = number("ratio");
        return w;
    });
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(e.what());
    }
}

}  // namespace orthopair
