#include "siturec/geo.hpp"

#include <cmath>
#include <string>

#include "siturec/errors.hpp"

namespace siturec {
namespace {

constexpr double kEarthRadiusM = 6371000.0;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

}  // namespace

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
  const double phi1 = lat1 * kDegToRad;
  const double phi2 = lat2 * kDegToRad;
  const double dphi = (lat2 - lat1) * kDegToRad;
  const double dlam = (lon2 - lon1) * kDegToRad;
  const double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) * std::sin(dlam / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(a));
}

void validate_coordinates(double lat, double lon) {
  if (!(lat >= -90.0 && lat <= 90.0)) {
    throw ValidationError("latitude " + std::to_string(lat) + " out of range [-90, 90]");
  }
  if (!(lon >= -180.0 && lon <= 180.0)) {
    throw ValidationError("longitude " + std::to_string(lon) + " out of range [-180, 180]");
  }
}

}  // namespace siturec
