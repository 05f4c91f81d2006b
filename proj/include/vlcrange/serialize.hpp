#pragma once

#include <string>

#include "vlcrange/bounds.hpp"
#include "vlcrange/json_writer.hpp"
#include "vlcrange/mle.hpp"
#include "vlcrange/noise.hpp"
#include "vlcrange/sweep.hpp"

namespace vlcrange {

void write_json(JsonWriter& w, const Geometry& g);
void write_json(JsonWriter& w, const NoiseBreakdown& n);
void write_json(JsonWriter& w, const BoundResult& b);
void write_json(JsonWriter& w, const McReport& r);
void write_json(JsonWriter& w, const SweepSpec& s);
/// Parameters in the external schema, numbers as exact decimal literals.
void write_parameters_json(JsonWriter& w, const SystemParameters& p);

/// {"axes": {...}, "order": [...], "quantity": ..., "values": [...], "meta": {...}}
std::string sweep_to_json(const SweepResult& r);
/// Header "m,P_t_W,h_m,ell_m,value", one row per grid point in storage order.
std::string sweep_to_csv(const SweepResult& r);

std::string ell_mean_to_json(const EllMean& r, const SweepResult& source);
/// Header "m,P_t_W,h_m,value".
std::string ell_mean_to_csv(const EllMean& r);

}  // namespace vlcrange
