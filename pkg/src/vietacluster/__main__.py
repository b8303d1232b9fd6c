from vietacluster.cli import main

main()
