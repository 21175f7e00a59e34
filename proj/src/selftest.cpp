namespace oirep {}
