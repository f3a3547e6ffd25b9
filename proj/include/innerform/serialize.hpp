#pragma once

#include <json.hpp>

#include "innerform/algebra/sympoly.hpp"
#include "innerform/epfun.hpp"
#include "innerform/finitegl/group.hpp"
#include "innerform/transfer.hpp"
#include "innerform/weylcomb.hpp"

namespace innerform::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& x);
json to_json(const QScalar& x);
json to_json(const SymPoly& f);
json to_json(const transfer::SurjectivityReport& r);

json to_json(const weyl::SdClassFunction& f);
json to_json(const weyl::VanishingReport& r);

/// {d, q, classes: [{rep_matrix, size, char_poly}]}
json group_json(const finitegl::GLGroup& g);
json to_json(const finitegl::ClassFunction& f);
json to_json(const finitegl::CombPropReport& r);
json to_json(const finitegl::IndConjugateReport& r);

json to_json(const ep::ParahoricCombo& x);
json to_json(const ep::ShadowReport& r);

}  // namespace innerform::io
