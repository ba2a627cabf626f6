#pragma once

namespace siturec {

/// Great-circle distance in meters (haversine, mean earth radius).
double haversine_m(double lat1, double lon1, double lat2, double lon2);

/// Throws ValidationError unless lat in [-90, 90] and lon in [-180, 180].
void validate_coordinates(double lat, double lon);

}  // namespace siturec
